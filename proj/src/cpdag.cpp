#include "gas/cpdag.hpp"

#include <stdexcept>

namespace gas {

std::vector<std::tuple<NodeId, NodeId, NodeId>> v_structures(const Dag& dag) {
    std::vector<std::tuple<NodeId, NodeId, NodeId>> out;
    for (NodeId w = 0; w < dag.node_count(); ++w) {
        const NodeSet& pa = dag.parents(w);
        for (int i = 0; i < pa.size(); ++i)
            for (int j = i + 1; j < pa.size(); ++j)
                if (!dag.adjacent(pa[i], pa[j])) out.emplace_back(pa[i], w, pa[j]);
    }
    return out;
}

namespace {

/// R1: z -> x, x - y, z not adjacent to y  =>  x -> y.
bool meek_rule_1(const Pdag& g, NodeId x, NodeId y) {
    for (NodeId z : g.parents(x))
        if (!g.adjacent(z, y)) return true;
    return false;
}

/// R2: x -> z -> y with x - y  =>  x -> y.
bool meek_rule_2(const Pdag& g, NodeId x, NodeId y) {
    for (NodeId z : g.children(x))
        if (g.has_directed(z, y)) return true;
    return false;
}

/// R3: x - z -> y, x - w -> y, z not adjacent to w, with x - y  =>  x -> y.
bool meek_rule_3(const Pdag& g, NodeId x, NodeId y) {
    NodeSet candidates = set_intersection(g.neighbors(x), g.parents(y));
    for (int i = 0; i < candidates.size(); ++i)
        for (int j = i + 1; j < candidates.size(); ++j)
            if (!g.adjacent(candidates[i], candidates[j])) return true;
    return false;
}

/// R4: w - x, w - y, w -> z -> y, z not adjacent to x, with x - y  =>  x -> y.
bool meek_rule_4(const Pdag& g, NodeId x, NodeId y) {
    for (NodeId w : set_intersection(g.neighbors(x), g.neighbors(y))) {
        for (NodeId z : g.children(w))
            if (g.has_directed(z, y) && !g.adjacent(z, x)) return true;
    }
    return false;
}

bool any_rule_fires(const Pdag& g, NodeId x, NodeId y) {
    return meek_rule_1(g, x, y) || meek_rule_2(g, x, y) || meek_rule_3(g, x, y) ||
           meek_rule_4(g, x, y);
}

}  // namespace

Pdag meek_closure(const Pdag& pdag) {
    if (!pdag.directed_part_acyclic())
        throw std::invalid_argument("meek_closure: directed part contains a cycle");
    Pdag g = pdag;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [u, v] : g.undirected_edges()) {
            if (!g.has_undirected(u, v)) continue;  // directed earlier in this pass
            if (any_rule_fires(g, u, v)) {
                g.direct_edge(u, v);
                changed = true;
            } else if (any_rule_fires(g, v, u)) {
                g.direct_edge(v, u);
                changed = true;
            }
        }
    }
    return g;
}

Pdag essential_graph(const Dag& dag) {
    Pdag g = Pdag::skeleton_of(dag);
    for (const auto& [u, w, v] : v_structures(dag)) {
        g.direct_edge(u, w);
        g.direct_edge(v, w);
    }
    return meek_closure(g);
}

bool same_mec(const Dag& g, const Dag& h) {
    if (g.node_count() != h.node_count())
        throw std::invalid_argument("same_mec: node counts differ");
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v = u + 1; v < g.node_count(); ++v)
            if (g.adjacent(u, v) != h.adjacent(u, v)) return false;
    return v_structures(g) == v_structures(h);
}

int shd(const Pdag& a, const Pdag& b) {
    if (a.node_count() != b.node_count())
        throw std::invalid_argument("shd: node counts differ");
    int distance = 0;
    for (NodeId u = 0; u < a.node_count(); ++u)
        for (NodeId v = u + 1; v < a.node_count(); ++v)
            if (a.status(u, v) != b.status(u, v)) ++distance;
    return distance;
}

SkeletonMetrics skeleton_metrics(const Pdag& predicted, const Pdag& truth) {
    if (predicted.node_count() != truth.node_count())
        throw std::invalid_argument("skeleton_metrics: node counts differ");
    SkeletonMetrics m;
    for (NodeId u = 0; u < predicted.node_count(); ++u) {
        for (NodeId v = u + 1; v < predicted.node_count(); ++v) {
            const bool in_predicted = predicted.adjacent(u, v);
            const bool in_truth = truth.adjacent(u, v);
            if (in_predicted && in_truth) ++m.true_positives;
            if (in_predicted && !in_truth) ++m.false_positives;
            if (!in_predicted && in_truth) ++m.false_negatives;
        }
    }
    const int tp = m.true_positives;
    m.precision = (tp + m.false_positives == 0) ? 1.0
                                                : static_cast<double>(tp) / (tp + m.false_positives);
    m.recall = (tp + m.false_negatives == 0) ? 1.0
                                             : static_cast<double>(tp) / (tp + m.false_negatives);
    m.f1 = (m.precision + m.recall == 0.0) ? 0.0
                                           : 2.0 * m.precision * m.recall / (m.precision + m.recall);
    return m;
}

}  // namespace gas
