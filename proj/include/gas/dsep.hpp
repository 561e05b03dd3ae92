#pragma once

#include "gas/dag.hpp"
#include "gas/node_set.hpp"

namespace gas {

/// d-separation of a from b given c, decided by a reachability pass over
/// active-trail states, linear in the number of edges.
///
/// Overlapping conditioning sets follow the convention that c is first
/// replaced by c minus (a union b); a and b themselves must be disjoint
/// and nonempty.
bool d_separated(const Dag& dag, const NodeSet& a, const NodeSet& b, const NodeSet& c);

/// Separation of a from b by c in the moral graph of the subgraph induced
/// by the inclusive ancestors of (a union b union c). Agrees with
/// d_separated on every input; kept as an independent cross-check oracle.
bool moral_separated(const Dag& dag, const NodeSet& a, const NodeSet& b, const NodeSet& c);

}  // namespace gas
