#pragma once

#include <random>

#include "sgt/hypergraph.hpp"
#include "sgt/weighted.hpp"

namespace sgt {

using Rng = std::mt19937_64;

// A random antichain: a handful of uniform coalitions, minimized. May be empty.
Hypergraph random_antichain(Rng& rng, int n, int max_seed_edges = 0);

// mu(W) of a random regular game: a random shift-antichain expanded through
// the shift closure. n is capped by the oracle bitmap (2^n entries).
Hypergraph random_regular_kernel(Rng& rng, int n);

struct RandomWeightedGame {
    Hypergraph kernel;
    ThresholdCriterion criterion; // a witness by construction
};

// Kernel of a random integer-weighted game together with its defining
// criterion.
RandomWeightedGame random_weighted_game(Rng& rng, int n, int max_weight = 9);

} // namespace sgt
