#pragma once

#include <optional>
#include <vector>

#include "sgt/feasibility.hpp"
#include "sgt/hypergraph.hpp"
#include "sgt/regular.hpp"

namespace sgt {

struct ThresholdCriterion {
    Rational quota;
    std::vector<Rational> weights; // indexed by player 1..n

    Rational weight_of(const Coalition& z) const;
};

// p(X) >= q on every kernel edge, p(Y) <= q-1 on every maximal loser.
bool criterion_valid(const ThresholdCriterion& c, const Hypergraph& kernel,
                     const Hypergraph& maximal_losers);

enum class NotWeightedReason { NotLinear, Infeasible };

struct WeightednessResult {
    std::optional<ThresholdCriterion> criterion;
    NotWeightedReason reason = NotWeightedReason::Infeasible; // when no criterion
    std::optional<PlayerOrdering> order;                      // regular order, when linear

    bool weighted() const { return criterion.has_value(); }
};

// Threshold-criterion synthesis: linearity, regular reordering, maximal losers
// from the regular dualization, then exact feasibility. Returned criteria are
// integral with gcd 1 and expressed in the original player labelling.
WeightednessResult is_weighted(const SimpleGame& g);
WeightednessResult is_homogeneous(const SimpleGame& g);

enum class MajorityKind { Majority, Submajority, Neither };

struct MajorityResult {
    MajorityKind kind = MajorityKind::Neither;
    std::optional<ThresholdCriterion> criterion;
};

MajorityResult is_majority(const SimpleGame& g);

// Equal-total multiplicity vectors over the kernel edges with
// u * H <= u' * neg(H) columnwise; a witness of non-weightedness. The check
// also demands that every complement selected by u' is actually losing, which
// is what makes the witness sound.
struct NonWeightedCertificate {
    std::vector<unsigned> u;
    std::vector<unsigned> u_prime;
};

bool verify_nonweighted_certificate(const Hypergraph& h, const NonWeightedCertificate& c);

std::optional<NonWeightedCertificate> search_nonweighted_certificate(const Hypergraph& h,
                                                                     unsigned max_total);

// Strongness of the game whose weights are p(a) = 2^a and whose only minimal
// winning coalition is X: compare p against the heaviest loser exactly.
bool power_of_two_strongness(int n, const Coalition& x);

} // namespace sgt
