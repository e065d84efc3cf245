#pragma once

#include <optional>
#include <utility>

#include "sgt/hypergraph.hpp"

namespace sgt {

struct DualityVerdict {
    bool coherent = false;
    bool complete = false;
    std::optional<Coalition> witness;

    bool dual() const { return coherent && complete; }
};

struct CoherenceResult {
    bool coherent = false;
    // a disjoint pair (X in H, Y in K) when incoherent
    std::optional<std::pair<Coalition, Coalition>> witness;
};

struct CompletenessResult {
    bool complete = false;
    // Z with Z not in nu(H) and A\Z not in nu(K) when incomplete
    std::optional<Coalition> witness;
};

// Every edge of H meets every edge of K.
CoherenceResult is_coherent(const Hypergraph& h, const Hypergraph& k);

// For all Z: Z in nu(H) or A\Z in nu(K). Decided by a divide-and-conquer
// recursion that branches on the player occurring most frequently across both
// families, with an exhaustive scan below a small-size threshold.
CompletenessResult is_complete(const Hypergraph& h, const Hypergraph& k);

DualityVerdict is_dual_pair(const Hypergraph& h, const Hypergraph& k);

bool game_is_proper(const SimpleGame& g);
CompletenessResult game_is_strong(const SimpleGame& g);
bool game_is_decisive(const SimpleGame& g);

} // namespace sgt
