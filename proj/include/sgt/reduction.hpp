#pragma once

#include "sgt/hypergraph.hpp"

namespace sgt {

// The doubling embedding into A' = {1..2n}: player 2a marks "a in X",
// player 2a-1 marks "a not in X".
Coalition embed_T(const Coalition& x, int n);
Hypergraph embed_image(const Hypergraph& h);

// True iff z over 2n players has exactly one of {2a, 2a-1} per original player.
bool in_T_image(const Coalition& z);

// G' = {Z^a : a in 1..n} with Z^a = {2a} + {2b-1 : b >= a}, rows Z^n..Z^1.
Hypergraph gadget(int n);

struct EmbeddedPair {
    int n = 0;       // original ground size
    Hypergraph hp;   // T(H) + G' over 2n
    Hypergraph kp;   // T(K) + G' over 2n
};

EmbeddedPair reduce_pair(const Hypergraph& h, const Hypergraph& k);

// Shift-kernel of the regular game carrying the strongness/decisiveness of g;
// the union T(kernel) + G' as constructed, optionally shift-minimized.
Hypergraph reduce_game(const SimpleGame& g, bool shift_minimize_output = false);

} // namespace sgt
