#pragma once

#include <utility>
#include <vector>

#include "gas/dag.hpp"
#include "gas/node_set.hpp"

namespace gas {

/// Status of a node pair in a partially directed graph. Forward means
/// smaller-id -> larger-id for the canonical pair (u < v).
enum class EdgeStatus { Absent, Undirected, Forward, Backward };

/// Partially directed graph: each node pair carries at most one of an
/// undirected edge or a directed edge (in one orientation). No self loops.
class Pdag {
  public:
    explicit Pdag(int p = 0);

    static Pdag complete_undirected(int p);
    static Pdag from_dag(const Dag& dag);      // all edges kept directed
    static Pdag skeleton_of(const Dag& dag);   // all edges made undirected

    int node_count() const { return p_; }

    bool has_directed(NodeId u, NodeId v) const;  // u -> v
    bool has_undirected(NodeId u, NodeId v) const;
    bool adjacent(NodeId u, NodeId v) const;

    void add_directed(NodeId u, NodeId v);
    void add_undirected(NodeId u, NodeId v);
    void remove_edge(NodeId u, NodeId v);  // whichever form is present

    /// Replaces the undirected edge u - v by u -> v. Directing an edge that
    /// is already u -> v is a no-op; v -> u or a missing edge is an error.
    void direct_edge(NodeId u, NodeId v);

    const NodeSet& parents(NodeId v) const;
    const NodeSet& children(NodeId v) const;
    const NodeSet& neighbors(NodeId v) const;       // undirected only
    const NodeSet& adjacent_nodes(NodeId v) const;  // any edge form

    int directed_edge_count() const { return directed_count_; }
    int undirected_edge_count() const { return undirected_count_; }
    int edge_count() const { return directed_count_ + undirected_count_; }

    EdgeStatus status(NodeId u, NodeId v) const;  // requires u < v

    std::vector<std::pair<NodeId, NodeId>> directed_edges() const;    // ascending
    std::vector<std::pair<NodeId, NodeId>> undirected_edges() const;  // u < v, ascending

    /// True iff the directed part is acyclic.
    bool directed_part_acyclic() const;

    friend bool operator==(const Pdag&, const Pdag&) = default;

  private:
    void check_node(NodeId v) const;
    void check_pair(NodeId u, NodeId v) const;

    int p_ = 0;
    int directed_count_ = 0;
    int undirected_count_ = 0;
    std::vector<NodeSet> parents_;
    std::vector<NodeSet> children_;
    std::vector<NodeSet> neighbors_;
    std::vector<NodeSet> adjacent_;
};

}  // namespace gas
