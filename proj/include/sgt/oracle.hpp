#pragma once

#include <cstdint>
#include <vector>

#include "sgt/hypergraph.hpp"

namespace sgt {

inline constexpr int kDefaultOracleLimit = 20;

struct OracleProperties {
    bool proper = false;
    bool strong = false;
    bool decisive = false;
};

namespace lattice {

// Indicator over all 2^n subsets: m is winning iff some edge of H is a subset
// of m. Superset-closure sweep, one pass per player; passes parallelize over
// the half lattice that carries the player.
std::vector<std::uint8_t> up_closure(const Hypergraph& h);

// Indicator of nu'(H): closure of the edge set under left-shifts. Masks in
// ascending numeric order are a topological order of the successor graph, so
// a single serial pass suffices.
std::vector<std::uint8_t> shift_closure(const Hypergraph& h);

// Z is transversal iff A\Z is not winning; same identity for the shift order.
std::vector<std::uint8_t> transversal_family(const std::vector<std::uint8_t>& winning, int n);

// Subset-minimal members of an up-closed indicator.
Hypergraph minimal_members(const std::vector<std::uint8_t>& member, int n);

// Shift-minimal members of a shift-up-closed indicator (no member among the
// left-shift predecessors).
Hypergraph shift_minimal_members(const std::vector<std::uint8_t>& member, int n);

// Subset-maximal non-members of an up-closed indicator (the maximal losers).
Hypergraph maximal_nonmembers(const std::vector<std::uint8_t>& member, int n);

} // namespace lattice

// lambda(H) = mu(tau(H)) by exhaustive scan over all 2^n subsets.
Hypergraph brute_transversal_kernel(const Hypergraph& h, int oracle_limit = kDefaultOracleLimit);

// Exhaustive properness / strongness / decisiveness over all S subseteq A.
OracleProperties oracle_properties(const Hypergraph& h, int oracle_limit = kDefaultOracleLimit);

void require_oracle_size(int n, int oracle_limit);

} // namespace sgt
