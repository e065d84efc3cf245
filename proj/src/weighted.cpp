#include "sgt/weighted.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace sgt {

Rational ThresholdCriterion::weight_of(const Coalition& z) const {
    Rational sum = 0;
    for (int a = 1; a <= z.n; ++a)
        if (z.contains(a)) sum += weights[static_cast<std::size_t>(a - 1)];
    return sum;
}

bool criterion_valid(const ThresholdCriterion& c, const Hypergraph& kernel,
                     const Hypergraph& maximal_losers) {
    for (const Rational& w : c.weights)
        if (w < 0) return false;
    for (const Coalition& x : kernel.edges)
        if (c.weight_of(x) < c.quota) return false;
    for (const Coalition& y : maximal_losers.edges)
        if (c.weight_of(y) > c.quota - 1) return false;
    return true;
}

namespace {

// scale to integers, then divide by the gcd of all entries
ThresholdCriterion normalize(ThresholdCriterion c) {
    BigInt lcm = 1;
    auto fold_den = [&lcm](const Rational& r) {
        lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(r)));
    };
    fold_den(c.quota);
    for (const Rational& w : c.weights) fold_den(w);
    auto scaled = [&](const Rational& r) {
        return BigInt(BigInt(numerator(r)) * (lcm / BigInt(denominator(r))));
    };
    BigInt g = scaled(c.quota);
    for (const Rational& w : c.weights) g = boost::multiprecision::gcd(g, scaled(w));
    if (g < 0) g = -g;
    if (g == 0) g = 1; // all-zero criterion of the all-winning game
    c.quota = Rational(scaled(c.quota) / g);
    for (Rational& w : c.weights) w = Rational(scaled(w) / g);
    return c;
}

struct SynthesisOutcome {
    std::optional<ThresholdCriterion> criterion;
    NotWeightedReason reason = NotWeightedReason::Infeasible;
    std::optional<PlayerOrdering> order;
    bool lambda_equals_kernel = false; // decisive test of the regular dualization
    bool lambda_responds = false;      // strongness test
};

// Shared body of the weightedness / homogeneity / majority procedures:
// linearity, reordering, maximal losers via the regular dualization, exact
// feasibility, criterion restored to the original labelling.
SynthesisOutcome synthesize(const SimpleGame& g, bool homogeneous) {
    SynthesisOutcome out;
    const auto order = find_regular_order(g.kernel);
    if (!order) {
        out.reason = NotWeightedReason::NotLinear;
        return out;
    }
    out.order = order;
    const int n = g.kernel.n;
    const Hypergraph rh = order->relabel(g.kernel);
    const Hypergraph lambda = regular_transversal_kernel(rh);
    const Hypergraph losers = complement_family(lambda);
    out.lambda_equals_kernel = lambda.same_edge_set(rh);
    out.lambda_responds = true;
    for (const Coalition& z : lambda.edges)
        if (!responds(rh, z)) { out.lambda_responds = false; break; }

    // variables w_1..w_n, q; all nonnegative
    const int nvars = n + 1;
    std::vector<LinearConstraint> cons;
    cons.reserve(rh.edges.size() + losers.edges.size());
    auto row_for = [&](const Coalition& z) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(nvars), Rational(0));
        for (int a = 1; a <= n; ++a)
            if (z.contains(a)) coeffs[static_cast<std::size_t>(a - 1)] = 1;
        coeffs[static_cast<std::size_t>(n)] = -1; // -q
        return coeffs;
    };
    for (const Coalition& x : rh.edges)
        cons.push_back({row_for(x), homogeneous ? Rel::Eq : Rel::GreaterEq, Rational(0)});
    for (const Coalition& y : losers.edges)
        cons.push_back({row_for(y), Rel::LessEq, Rational(-1)});

    const auto point = linear_feasibility(nvars, cons, std::vector<bool>(static_cast<std::size_t>(nvars), true));
    if (!point) return out;

    ThresholdCriterion c;
    c.quota = (*point)[static_cast<std::size_t>(n)];
    c.weights.resize(static_cast<std::size_t>(n));
    for (int a = 1; a <= n; ++a) // player a carries the weight of its rank
        c.weights[static_cast<std::size_t>(a - 1)] =
            (*point)[static_cast<std::size_t>(order->rank[static_cast<std::size_t>(a - 1)] - 1)];
    c = normalize(std::move(c));

    // re-verify against the original labelling before handing it out
    std::vector<Coalition> orig_losers;
    orig_losers.reserve(losers.edges.size());
    for (const Coalition& y : losers.edges) orig_losers.push_back(order->restore(y));
    if (!criterion_valid(c, g.kernel, Hypergraph(n, std::move(orig_losers))))
        throw Error("threshold criterion failed re-verification");
    out.criterion = std::move(c);
    return out;
}

} // namespace

WeightednessResult is_weighted(const SimpleGame& g) {
    SynthesisOutcome s = synthesize(g, false);
    return WeightednessResult{std::move(s.criterion), s.reason, std::move(s.order)};
}

WeightednessResult is_homogeneous(const SimpleGame& g) {
    SynthesisOutcome s = synthesize(g, true);
    return WeightednessResult{std::move(s.criterion), s.reason, std::move(s.order)};
}

MajorityResult is_majority(const SimpleGame& g) {
    SynthesisOutcome s = synthesize(g, false);
    MajorityResult r;
    if (!s.order || !s.criterion) return r;
    if (s.lambda_equals_kernel)
        r.kind = MajorityKind::Majority;
    else if (s.lambda_responds)
        r.kind = MajorityKind::Submajority;
    else
        return r;
    r.criterion = std::move(s.criterion);
    return r;
}

bool verify_nonweighted_certificate(const Hypergraph& h, const NonWeightedCertificate& c) {
    const std::size_t m = h.edges.size();
    if (c.u.size() != m || c.u_prime.size() != m)
        throw DimensionMismatch("certificate multiplicities do not match the kernel");
    unsigned long long tu = 0, tup = 0;
    for (unsigned v : c.u) tu += v;
    for (unsigned v : c.u_prime) tup += v;
    if (tu != tup || tu == 0) return false;
    for (int a = 1; a <= h.n; ++a) {
        unsigned long long lhs = 0, rhs = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (h.edges[i].contains(a)) lhs += c.u[i];
            else rhs += c.u_prime[i];
        }
        if (lhs > rhs) return false;
    }
    // the selected complements must actually be losing coalitions
    for (std::size_t i = 0; i < m; ++i)
        if (c.u_prime[i] > 0 && responds(h, h.edges[i].complement())) return false;
    return true;
}

namespace {

void compositions(unsigned total, std::size_t parts, std::vector<unsigned>& cur,
                  std::vector<std::vector<unsigned>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (unsigned v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, parts - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<unsigned long long> column_sums(const Hypergraph& h, const std::vector<unsigned>& mult,
                                            bool complements) {
    std::vector<unsigned long long> sums(static_cast<std::size_t>(h.n), 0);
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        if (!mult[i]) continue;
        for (int a = 1; a <= h.n; ++a)
            if (h.edges[i].contains(a) != complements) sums[static_cast<std::size_t>(a - 1)] += mult[i];
    }
    return sums;
}

} // namespace

std::optional<NonWeightedCertificate> search_nonweighted_certificate(const Hypergraph& h,
                                                                     unsigned max_total) {
    const std::size_t m = h.edges.size();
    if (m == 0) return std::nullopt;
    {
        // C(max_total + m - 1, m - 1) candidate vectors per side
        double count = 1;
        for (unsigned i = 1; i <= max_total; ++i)
            count *= static_cast<double>(m - 1 + i) / i;
        if (count > 2e6)
            throw Error("certificate search space too large; lower the multiplicity bound");
    }
    std::vector<bool> complement_loses(m);
    for (std::size_t i = 0; i < m; ++i)
        complement_loses[i] = !responds(h, h.edges[i].complement());
    for (unsigned total = 1; total <= max_total; ++total) {
        std::vector<std::vector<unsigned>> side;
        std::vector<unsigned> cur;
        compositions(total, m, cur, side);
        std::vector<std::vector<unsigned long long>> usums(side.size()), upsums(side.size());
        std::vector<char> upok(side.size());
        for (std::size_t i = 0; i < side.size(); ++i) {
            usums[i] = column_sums(h, side[i], false);
            upsums[i] = column_sums(h, side[i], true);
            bool ok = true;
            for (std::size_t e = 0; e < m && ok; ++e)
                if (side[i][e] && !complement_loses[e]) ok = false;
            upok[i] = ok;
        }
        for (std::size_t i = 0; i < side.size(); ++i) {
            for (std::size_t j = 0; j < side.size(); ++j) {
                if (!upok[j]) continue;
                bool leq = true;
                for (int a = 0; a < h.n && leq; ++a)
                    leq = usums[i][static_cast<std::size_t>(a)] <= upsums[j][static_cast<std::size_t>(a)];
                if (!leq) continue;
                NonWeightedCertificate c{side[i], side[j]};
                assert(verify_nonweighted_certificate(h, c));
                return c;
            }
        }
    }
    return std::nullopt;
}

bool power_of_two_strongness(int n, const Coalition& x) {
    if (x.n != n) throw DimensionMismatch("power_of_two_strongness: ground size mismatch");
    if (x.is_empty()) return true; // quota 0, every coalition wins
    auto weight = [](std::uint64_t mask) {
        // p(Z) = sum of 2^a over a in Z = 2 * mask value
        return BigInt(BigInt(mask) * 2);
    };
    const std::uint64_t full = Coalition::full(n).bits;
    const std::uint64_t heaviest_loser = x.bits - 1;
    return weight(full & ~heaviest_loser) >= weight(x.bits);
}

} // namespace sgt
