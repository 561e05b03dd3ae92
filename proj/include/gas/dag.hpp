#pragma once

#include <utility>
#include <vector>

#include "gas/node_set.hpp"

namespace gas {

/// Immutable directed acyclic graph over nodes 0..p-1.
///
/// Construction validates the edge list: edges must be in range, free of
/// self loops and duplicates, and the graph must admit a topological order.
class Dag {
  public:
    Dag(int p, const std::vector<std::pair<NodeId, NodeId>>& edges);

    int node_count() const { return p_; }

    const NodeSet& parents(NodeId v) const;
    const NodeSet& children(NodeId v) const;

    bool has_edge(NodeId u, NodeId v) const;  // u -> v
    bool adjacent(NodeId u, NodeId v) const;

    int edge_count() const { return edge_count_; }

    /// All edges as (parent, child) pairs in ascending order.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    /// Deterministic topological order (smallest id first among ready nodes).
    std::vector<NodeId> topological_order() const;

    friend bool operator==(const Dag&, const Dag&) = default;

  private:
    void check_node(NodeId v) const;

    int p_ = 0;
    int edge_count_ = 0;
    std::vector<NodeSet> parents_;
    std::vector<NodeSet> children_;
};

enum class AncestralKind { Ancestors, Descendants, Parents, Children };

/// Exclusive ancestral sets: Anc(v), Des(v), Pa(v), Ch(v). Inclusive
/// variants are obtained by the caller inserting v itself.
NodeSet ancestral_query(const Dag& dag, NodeId v, AncestralKind kind);

NodeSet ancestors(const Dag& dag, NodeId v);
NodeSet descendants(const Dag& dag, NodeId v);

/// Inclusive ancestors of a whole set: union of Anc[v] over v in w.
NodeSet ancestors_inclusive(const Dag& dag, const NodeSet& w);

/// Source nodes within w: {v in w : Anc(v) and w disjoint}.
NodeSet sources(const Dag& dag, const NodeSet& w);

/// True iff s is closed under taking ancestors.
bool is_prefix_set(const Dag& dag, const NodeSet& s);

}  // namespace gas
