#pragma once

#include <tuple>
#include <vector>

#include "gas/dag.hpp"
#include "gas/pdag.hpp"

namespace gas {

/// Skeleton comparison counts between a predicted and a ground-truth graph.
/// Precision and recall treat 0/0 as 1, the F1 score treats 0/0 as 0.
struct SkeletonMetrics {
    int true_positives = 0;
    int false_positives = 0;
    int false_negatives = 0;
    double precision = 1.0;
    double recall = 1.0;
    double f1 = 0.0;

    int extra_edges() const { return false_positives; }
    int missing_edges() const { return false_negatives; }
};

/// V-structures u -> w <- v with u, v nonadjacent, reported as (u, w, v)
/// triples with u < v, in ascending order.
std::vector<std::tuple<NodeId, NodeId, NodeId>> v_structures(const Dag& dag);

/// The essential graph of dag: its skeleton with every v-structure edge
/// directed as in dag and the orientation rules applied to a fixpoint.
Pdag essential_graph(const Dag& dag);

/// Applies orientation rules R1-R4 repeatedly until none fires. Directed
/// edges are never removed or reoriented; the input's directed part must
/// be acyclic.
Pdag meek_closure(const Pdag& pdag);

/// True iff g and h have equal skeletons and equal v-structure sets.
bool same_mec(const Dag& g, const Dag& h);

/// Structural Hamming distance: the number of node pairs whose edge status
/// (absent, undirected, or either orientation) differs. Each differing pair
/// counts once.
int shd(const Pdag& a, const Pdag& b);

SkeletonMetrics skeleton_metrics(const Pdag& predicted, const Pdag& truth);

}  // namespace gas
