#include "gas/clique.hpp"

#include <unordered_map>
#include <vector>

namespace gas {

namespace {

struct CliqueSearch {
    const std::vector<NodeSet>& adj;  // restricted adjacency, indexed by slot
    int target;

    bool expand(int clique_size, NodeSet candidates, NodeSet excluded) {
        if (clique_size >= target) return true;
        if (clique_size + candidates.size() < target) return false;

        // Pivot on the vertex covering the most candidates.
        NodeId pivot = -1;
        int best = -1;
        for (NodeId u : set_union(candidates, excluded)) {
            int covered = set_intersection(candidates, adj[static_cast<std::size_t>(u)]).size();
            if (covered > best) {
                best = covered;
                pivot = u;
            }
        }
        NodeSet branch = pivot >= 0
                             ? set_difference(candidates, adj[static_cast<std::size_t>(pivot)])
                             : candidates;
        for (NodeId v : branch) {
            const NodeSet& nv = adj[static_cast<std::size_t>(v)];
            if (expand(clique_size + 1, set_intersection(candidates, nv),
                       set_intersection(excluded, nv)))
                return true;
            candidates.erase(v);
            excluded.insert(v);
        }
        return false;
    }
};

}  // namespace

bool has_clique_of_size(const Pdag& pdag, const NodeSet& nodes, int k) {
    if (k <= 0) return true;
    if (k == 1) return !nodes.empty();

    // Compact the restricted skeleton into slots 0..m-1.
    std::unordered_map<NodeId, NodeId> slot;
    slot.reserve(static_cast<std::size_t>(nodes.size()));
    for (int i = 0; i < nodes.size(); ++i) slot[nodes[i]] = i;
    std::vector<NodeSet> adj(static_cast<std::size_t>(nodes.size()));
    for (int i = 0; i < nodes.size(); ++i) {
        for (NodeId w : set_intersection(pdag.adjacent_nodes(nodes[i]), nodes))
            adj[static_cast<std::size_t>(i)].insert(slot.at(w));
    }

    // Nodes of restricted degree < k-1 cannot be part of a size-k clique;
    // dropping them may lower other degrees, so iterate.
    NodeSet candidates = NodeSet::range(nodes.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeId v : candidates.items()) {
            if (set_intersection(adj[static_cast<std::size_t>(v)], candidates).size() < k - 1) {
                candidates.erase(v);
                changed = true;
                break;
            }
        }
    }
    if (candidates.size() < k) return false;

    CliqueSearch search{adj, k};
    return search.expand(0, candidates, NodeSet{});
}

}  // namespace gas
