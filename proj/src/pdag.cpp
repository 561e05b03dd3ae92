#include "gas/pdag.hpp"

#include <queue>
#include <stdexcept>
#include <string>

namespace gas {

Pdag::Pdag(int p) : p_(p) {
    if (p < 0) throw std::invalid_argument("Pdag: negative node count");
    parents_.resize(static_cast<std::size_t>(p));
    children_.resize(static_cast<std::size_t>(p));
    neighbors_.resize(static_cast<std::size_t>(p));
    adjacent_.resize(static_cast<std::size_t>(p));
}

Pdag Pdag::complete_undirected(int p) {
    Pdag g(p);
    for (NodeId u = 0; u < p; ++u)
        for (NodeId v = u + 1; v < p; ++v) g.add_undirected(u, v);
    return g;
}

Pdag Pdag::from_dag(const Dag& dag) {
    Pdag g(dag.node_count());
    for (const auto& [u, v] : dag.edges()) g.add_directed(u, v);
    return g;
}

Pdag Pdag::skeleton_of(const Dag& dag) {
    Pdag g(dag.node_count());
    for (const auto& [u, v] : dag.edges()) g.add_undirected(u, v);
    return g;
}

void Pdag::check_node(NodeId v) const {
    if (v < 0 || v >= p_)
        throw std::invalid_argument("Pdag: node " + std::to_string(v) + " out of range");
}

void Pdag::check_pair(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    if (u == v) throw std::invalid_argument("Pdag: self loop at node " + std::to_string(u));
}

bool Pdag::has_directed(NodeId u, NodeId v) const {
    check_pair(u, v);
    return children_[static_cast<std::size_t>(u)].contains(v);
}

bool Pdag::has_undirected(NodeId u, NodeId v) const {
    check_pair(u, v);
    return neighbors_[static_cast<std::size_t>(u)].contains(v);
}

bool Pdag::adjacent(NodeId u, NodeId v) const {
    check_pair(u, v);
    return adjacent_[static_cast<std::size_t>(u)].contains(v);
}

void Pdag::add_directed(NodeId u, NodeId v) {
    check_pair(u, v);
    if (adjacent(u, v)) throw std::invalid_argument("Pdag: pair already has an edge");
    children_[static_cast<std::size_t>(u)].insert(v);
    parents_[static_cast<std::size_t>(v)].insert(u);
    adjacent_[static_cast<std::size_t>(u)].insert(v);
    adjacent_[static_cast<std::size_t>(v)].insert(u);
    ++directed_count_;
}

void Pdag::add_undirected(NodeId u, NodeId v) {
    check_pair(u, v);
    if (adjacent(u, v)) throw std::invalid_argument("Pdag: pair already has an edge");
    neighbors_[static_cast<std::size_t>(u)].insert(v);
    neighbors_[static_cast<std::size_t>(v)].insert(u);
    adjacent_[static_cast<std::size_t>(u)].insert(v);
    adjacent_[static_cast<std::size_t>(v)].insert(u);
    ++undirected_count_;
}

void Pdag::remove_edge(NodeId u, NodeId v) {
    check_pair(u, v);
    if (!adjacent(u, v)) throw std::invalid_argument("Pdag: removing a missing edge");
    if (neighbors_[static_cast<std::size_t>(u)].contains(v)) {
        neighbors_[static_cast<std::size_t>(u)].erase(v);
        neighbors_[static_cast<std::size_t>(v)].erase(u);
        --undirected_count_;
    } else {
        children_[static_cast<std::size_t>(u)].erase(v);
        children_[static_cast<std::size_t>(v)].erase(u);
        parents_[static_cast<std::size_t>(u)].erase(v);
        parents_[static_cast<std::size_t>(v)].erase(u);
        --directed_count_;
    }
    adjacent_[static_cast<std::size_t>(u)].erase(v);
    adjacent_[static_cast<std::size_t>(v)].erase(u);
}

void Pdag::direct_edge(NodeId u, NodeId v) {
    check_pair(u, v);
    if (has_directed(u, v)) return;
    if (has_directed(v, u))
        throw std::invalid_argument("Pdag: directing would flip an oriented edge");
    if (!has_undirected(u, v))
        throw std::invalid_argument("Pdag: directing a missing edge");
    neighbors_[static_cast<std::size_t>(u)].erase(v);
    neighbors_[static_cast<std::size_t>(v)].erase(u);
    --undirected_count_;
    children_[static_cast<std::size_t>(u)].insert(v);
    parents_[static_cast<std::size_t>(v)].insert(u);
    ++directed_count_;
}

const NodeSet& Pdag::parents(NodeId v) const {
    check_node(v);
    return parents_[static_cast<std::size_t>(v)];
}

const NodeSet& Pdag::children(NodeId v) const {
    check_node(v);
    return children_[static_cast<std::size_t>(v)];
}

const NodeSet& Pdag::neighbors(NodeId v) const {
    check_node(v);
    return neighbors_[static_cast<std::size_t>(v)];
}

const NodeSet& Pdag::adjacent_nodes(NodeId v) const {
    check_node(v);
    return adjacent_[static_cast<std::size_t>(v)];
}

EdgeStatus Pdag::status(NodeId u, NodeId v) const {
    if (u >= v) throw std::invalid_argument("Pdag::status expects u < v");
    if (has_undirected(u, v)) return EdgeStatus::Undirected;
    if (has_directed(u, v)) return EdgeStatus::Forward;
    if (has_directed(v, u)) return EdgeStatus::Backward;
    return EdgeStatus::Absent;
}

std::vector<std::pair<NodeId, NodeId>> Pdag::directed_edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(static_cast<std::size_t>(directed_count_));
    for (NodeId u = 0; u < p_; ++u)
        for (NodeId v : children_[static_cast<std::size_t>(u)]) out.emplace_back(u, v);
    return out;
}

std::vector<std::pair<NodeId, NodeId>> Pdag::undirected_edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(static_cast<std::size_t>(undirected_count_));
    for (NodeId u = 0; u < p_; ++u)
        for (NodeId v : neighbors_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Pdag::directed_part_acyclic() const {
    std::vector<int> indegree(static_cast<std::size_t>(p_), 0);
    for (NodeId v = 0; v < p_; ++v)
        indegree[static_cast<std::size_t>(v)] = parents_[static_cast<std::size_t>(v)].size();
    std::queue<NodeId> ready;
    for (NodeId v = 0; v < p_; ++v)
        if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
    int seen = 0;
    while (!ready.empty()) {
        NodeId v = ready.front();
        ready.pop();
        ++seen;
        for (NodeId c : children_[static_cast<std::size_t>(v)])
            if (--indegree[static_cast<std::size_t>(c)] == 0) ready.push(c);
    }
    return seen == p_;
}

}  // namespace gas
