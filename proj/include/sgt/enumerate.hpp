#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "sgt/hypergraph.hpp"

namespace sgt {

inline constexpr int kDefaultEnumerationLimit = 6;
inline constexpr int kMaxEnumerationGround = 12;

enum class EnumOrder { Subset, Shift };

// Visits every antichain over n players exactly once, including the empty
// family and {emptyset}, in depth-first order with edges ascending. With
// EnumOrder::Shift the family is an antichain of the shift order, i.e. the
// economic specification of a regular game. Return false to stop early.
void enumerate_antichains(int n, EnumOrder order,
                          const std::function<bool(const Hypergraph&)>& visit);

struct CensusOptions {
    int n = 0;
    EnumOrder order = EnumOrder::Subset;
    std::string filter;              // comma-separated properties, '!' negates
    bool allow_long_running = false; // required for n > kDefaultEnumerationLimit
    bool parallel = true;            // counting may shard; streaming never does
    std::string checkpoint_path;     // resume state for long jobs
    unsigned long long checkpoint_every = 20'000'000;
};

struct CensusCounts {
    unsigned long long total = 0;
    unsigned long long matching = 0;
    // indexed by proper | strong<<1 | regular<<2
    unsigned long long combo[8] = {0, 0, 0, 0, 0, 0, 0, 0};

    unsigned long long count_proper() const;
    unsigned long long count_strong() const;
    unsigned long long count_decisive() const;
    unsigned long long count_regular() const;
};

// Exhaustive labelled-kernel census. on_match, when given, receives every
// kernel passing the filter in deterministic stream order (this disables
// sharding).
CensusCounts run_census(const CensusOptions& opts,
                        const std::function<void(const Hypergraph&)>& on_match = {});

} // namespace sgt
