#pragma once

#include <optional>
#include <vector>

#include "sgt/hypergraph.hpp"
#include "sgt/oracle.hpp"

namespace sgt {

// X <=' Z: every top-suffix count of X is dominated by that of Z. The closure
// of left-shifts; player n is the most powerful.
bool shift_leq(const Coalition& x, const Coalition& z);
bool shift_lt(const Coalition& x, const Coalition& z);

// A hypergraph that is an antichain for the shift order, read as the family of
// shift-minimal winning coalitions of a regular game.
struct RegularKernel {
    int n = 0;
    std::vector<Coalition> edges;

    RegularKernel() = default;
    explicit RegularKernel(Hypergraph h);

    Hypergraph as_hypergraph() const { return Hypergraph(n, edges); }
};

// Bijection original player label -> power rank (rank n strongest).
struct PlayerOrdering {
    std::vector<int> rank; // rank[a-1] is the rank of player a

    static PlayerOrdering identity(int n);
    bool is_identity() const;
    Coalition relabel(const Coalition& x) const;
    Hypergraph relabel(const Hypergraph& h) const;
    Coalition restore(const Coalition& x) const; // inverse relabelling
};

struct ShiftViolation {
    Coalition edge;
    int a = 0; // incoming, more powerful player
    int b = 0; // outgoing member
};

struct RegularityResult {
    bool regular = false;
    std::optional<ShiftViolation> violation;
};

// Regularity with respect to the natural order. Tests adjacent swaps
// (a = b+1) only; `all_pairs` switches to testing every increasing shift.
RegularityResult is_regular(const Hypergraph& h, bool all_pairs = false);

// Reversal loop: repeatedly find an increasing shift that leaves nu(H) and
// reverse the offending pair definitively; at most n(n-1)/2 reversals.
// nullopt means the game is not linear.
std::optional<PlayerOrdering> find_regular_order(const Hypergraph& h);

// The shift-minimal edges of the kernel of a regular game.
RegularKernel shift_minimize(const Hypergraph& h);

// nu' membership test against a shift-kernel.
bool shift_responds(const RegularKernel& hp, const Coalition& z);

// lambda(H) for a regular kernel, generated from the maximal losing
// coalitions; |result| <= n*|H| + 1.
Hypergraph regular_transversal_kernel(const Hypergraph& h);

// lambda'(Hp) by exhaustive scan. The raw overload also accepts families that
// are not shift-antichains, such as the embedded unions T(H) + G'.
Hypergraph shift_transversal_kernel_oracle(const RegularKernel& hp,
                                           int oracle_limit = kDefaultOracleLimit);
Hypergraph shift_transversal_kernel_oracle(const Hypergraph& hp,
                                           int oracle_limit = kDefaultOracleLimit);

bool regular_is_decisive(const Hypergraph& h);
bool regular_is_strong(const Hypergraph& h);

} // namespace sgt
