#include "gas/dsep.hpp"

#include <array>
#include <queue>
#include <stdexcept>
#include <vector>

namespace gas {

namespace {

struct ReducedQuery {
    NodeSet a, b, c;
};

ReducedQuery reduce(const NodeSet& a, const NodeSet& b, const NodeSet& c) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("d_separated: endpoint sets must be nonempty");
    if (!set_intersection(a, b).empty())
        throw std::invalid_argument("d_separated: endpoint sets overlap");
    return {a, b, set_difference(c, set_union(a, b))};
}

}  // namespace

bool d_separated(const Dag& dag, const NodeSet& a, const NodeSet& b, const NodeSet& c) {
    const auto [from, to, cond] = reduce(a, b, c);
    const int p = dag.node_count();

    const NodeSet cond_anc = ancestors_inclusive(dag, cond);

    // Trail states: a node is entered either through one of its children
    // (travelling up) or through one of its parents (travelling down).
    enum : int { kUp = 0, kDown = 1 };
    std::vector<std::array<bool, 2>> visited(static_cast<std::size_t>(p), {false, false});
    std::queue<std::pair<NodeId, int>> frontier;
    for (NodeId v : from) frontier.emplace(v, kUp);

    while (!frontier.empty()) {
        auto [v, dir] = frontier.front();
        frontier.pop();
        if (visited[static_cast<std::size_t>(v)][static_cast<std::size_t>(dir)]) continue;
        visited[static_cast<std::size_t>(v)][static_cast<std::size_t>(dir)] = true;

        if (!cond.contains(v) && to.contains(v)) return false;

        if (dir == kUp && !cond.contains(v)) {
            for (NodeId u : dag.parents(v)) frontier.emplace(u, kUp);
            for (NodeId w : dag.children(v)) frontier.emplace(w, kDown);
        } else if (dir == kDown) {
            if (!cond.contains(v)) {
                for (NodeId w : dag.children(v)) frontier.emplace(w, kDown);
            }
            // Colliders pass the trail back up only when they can reach
            // the conditioning set through descendants.
            if (cond_anc.contains(v)) {
                for (NodeId u : dag.parents(v)) frontier.emplace(u, kUp);
            }
        }
    }
    return true;
}

bool moral_separated(const Dag& dag, const NodeSet& a, const NodeSet& b, const NodeSet& c) {
    const auto [from, to, cond] = reduce(a, b, c);
    const int p = dag.node_count();

    const NodeSet relevant = ancestors_inclusive(dag, set_union(set_union(from, to), cond));

    // Moralize the induced subgraph: keep its edges undirected and marry
    // all parent pairs of each retained node.
    std::vector<NodeSet> moral(static_cast<std::size_t>(p));
    auto connect = [&moral](NodeId x, NodeId y) {
        moral[static_cast<std::size_t>(x)].insert(y);
        moral[static_cast<std::size_t>(y)].insert(x);
    };
    for (NodeId v : relevant) {
        NodeSet pa = set_intersection(dag.parents(v), relevant);
        for (NodeId u : pa) connect(u, v);
        for (int i = 0; i < pa.size(); ++i)
            for (int j = i + 1; j < pa.size(); ++j) connect(pa[i], pa[j]);
    }

    std::vector<bool> seen(static_cast<std::size_t>(p), false);
    std::queue<NodeId> frontier;
    for (NodeId v : from) {
        if (cond.contains(v)) continue;
        seen[static_cast<std::size_t>(v)] = true;
        frontier.push(v);
    }
    while (!frontier.empty()) {
        NodeId v = frontier.front();
        frontier.pop();
        if (to.contains(v)) return false;
        for (NodeId w : moral[static_cast<std::size_t>(v)]) {
            if (seen[static_cast<std::size_t>(w)] || cond.contains(w)) continue;
            seen[static_cast<std::size_t>(w)] = true;
            frontier.push(w);
        }
    }
    return true;
}

}  // namespace gas
