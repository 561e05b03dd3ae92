#include "gas/dag.hpp"

#include <queue>
#include <stdexcept>
#include <string>

namespace gas {

Dag::Dag(int p, const std::vector<std::pair<NodeId, NodeId>>& edges) : p_(p) {
    if (p < 0) throw std::invalid_argument("Dag: negative node count");
    parents_.resize(static_cast<std::size_t>(p));
    children_.resize(static_cast<std::size_t>(p));
    for (const auto& [u, v] : edges) {
        check_node(u);
        check_node(v);
        if (u == v) throw std::invalid_argument("Dag: self loop at node " + std::to_string(u));
        if (has_edge(u, v)) throw std::invalid_argument("Dag: duplicate edge");
        if (has_edge(v, u)) throw std::invalid_argument("Dag: edge present in both directions");
        children_[static_cast<std::size_t>(u)].insert(v);
        parents_[static_cast<std::size_t>(v)].insert(u);
        ++edge_count_;
    }
    if (static_cast<int>(topological_order().size()) != p_)
        throw std::invalid_argument("Dag: edge list contains a directed cycle");
}

void Dag::check_node(NodeId v) const {
    if (v < 0 || v >= p_)
        throw std::invalid_argument("Dag: node " + std::to_string(v) + " out of range");
}

const NodeSet& Dag::parents(NodeId v) const {
    check_node(v);
    return parents_[static_cast<std::size_t>(v)];
}

const NodeSet& Dag::children(NodeId v) const {
    check_node(v);
    return children_[static_cast<std::size_t>(v)];
}

bool Dag::has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    return children_[static_cast<std::size_t>(u)].contains(v);
}

bool Dag::adjacent(NodeId u, NodeId v) const { return has_edge(u, v) || has_edge(v, u); }

std::vector<std::pair<NodeId, NodeId>> Dag::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (NodeId u = 0; u < p_; ++u)
        for (NodeId v : children_[static_cast<std::size_t>(u)]) out.emplace_back(u, v);
    return out;
}

std::vector<NodeId> Dag::topological_order() const {
    std::vector<int> indegree(static_cast<std::size_t>(p_), 0);
    for (NodeId v = 0; v < p_; ++v)
        indegree[static_cast<std::size_t>(v)] = parents_[static_cast<std::size_t>(v)].size();
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (NodeId v = 0; v < p_; ++v)
        if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
    std::vector<NodeId> order;
    order.reserve(static_cast<std::size_t>(p_));
    while (!ready.empty()) {
        NodeId v = ready.top();
        ready.pop();
        order.push_back(v);
        for (NodeId c : children_[static_cast<std::size_t>(v)])
            if (--indegree[static_cast<std::size_t>(c)] == 0) ready.push(c);
    }
    return order;
}

namespace {

NodeSet reachable_excluding_start(const Dag& dag, NodeId start, bool follow_children) {
    NodeSet seen;
    std::queue<NodeId> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
        NodeId v = frontier.front();
        frontier.pop();
        const NodeSet& next = follow_children ? dag.children(v) : dag.parents(v);
        for (NodeId w : next) {
            if (!seen.contains(w)) {
                seen.insert(w);
                frontier.push(w);
            }
        }
    }
    seen.erase(start);
    return seen;
}

}  // namespace

NodeSet ancestral_query(const Dag& dag, NodeId v, AncestralKind kind) {
    switch (kind) {
        case AncestralKind::Parents:
            return dag.parents(v);
        case AncestralKind::Children:
            return dag.children(v);
        case AncestralKind::Ancestors:
            return reachable_excluding_start(dag, v, /*follow_children=*/false);
        case AncestralKind::Descendants:
            return reachable_excluding_start(dag, v, /*follow_children=*/true);
    }
    throw std::invalid_argument("ancestral_query: unknown kind");
}

NodeSet ancestors(const Dag& dag, NodeId v) {
    return ancestral_query(dag, v, AncestralKind::Ancestors);
}

NodeSet descendants(const Dag& dag, NodeId v) {
    return ancestral_query(dag, v, AncestralKind::Descendants);
}

NodeSet ancestors_inclusive(const Dag& dag, const NodeSet& w) {
    NodeSet closed = w;
    std::queue<NodeId> frontier;
    for (NodeId v : w) frontier.push(v);
    while (!frontier.empty()) {
        NodeId v = frontier.front();
        frontier.pop();
        for (NodeId u : dag.parents(v)) {
            if (!closed.contains(u)) {
                closed.insert(u);
                frontier.push(u);
            }
        }
    }
    return closed;
}

NodeSet sources(const Dag& dag, const NodeSet& w) {
    NodeSet out;
    for (NodeId v : w) {
        if (set_intersection(ancestors(dag, v), w).empty()) out.insert(v);
    }
    return out;
}

bool is_prefix_set(const Dag& dag, const NodeSet& s) {
    for (NodeId v : s) {
        if (!s.contains_all(ancestors(dag, v))) return false;
    }
    return true;
}

}  // namespace gas
