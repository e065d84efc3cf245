#pragma once

#include "sgt/hypergraph.hpp"

namespace sgt {

// lambda(H) for arbitrary hypergraphs by sequential Berge multiplication with
// subsumption pruning. Exact, but the intermediate families can be as large as
// the final one, which may be exponential in |H|.
Hypergraph minimal_transversals(const Hypergraph& h);

} // namespace sgt
