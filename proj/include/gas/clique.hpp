#pragma once

#include "gas/node_set.hpp"
#include "gas/pdag.hpp"

namespace gas {

/// True iff the skeleton of pdag restricted to `nodes` contains a clique of
/// at least k mutually adjacent nodes. Pivoted Bron-Kerbosch search that
/// terminates as soon as one clique of size k is found; candidates with
/// restricted degree below k-1 are pruned up front. k <= 1 is answered
/// directly (the empty clique always exists, a singleton needs one node).
bool has_clique_of_size(const Pdag& pdag, const NodeSet& nodes, int k);

}  // namespace gas
