// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sgt/duality.hpp"
#include "sgt/enumerate.hpp"
#include "sgt/families.hpp"
#include "sgt/generators.hpp"
#include "sgt/oracle.hpp"
#include "sgt/reduction.hpp"
#include "sgt/regular.hpp"
#include "sgt/report.hpp"
#include "sgt/transversal.hpp"
#include "sgt/weighted.hpp"
#include "support.hpp"

using namespace sgt;
using testsupport::game;
using testsupport::masks_where;
using testsupport::row;
using testsupport::rows_of;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

// ---------------------------------------------------------------- criterion 1

bool golden_tables(Check& c, double& elapsed) {
    const Hypergraph h = game(3, {"011", "100", "111"});
    const auto t0 = Clock::now();
    const auto neg = rows_of(complement_family(h).sorted());
    const auto mu = rows_of(minimize(h));
    const auto nu = masks_where(3, [&](const Coalition& z) { return responds(h, z); });
    const auto tau = masks_where(3, [&](const Coalition& z) { return transversal(h, z); });
    const auto lambda = rows_of(brute_transversal_kernel(h).sorted());
    elapsed = ms_since(t0);
    c.expect(rows_of(h) == std::vector<std::string>{"011", "100", "111"}, "H table");
    c.expect(neg == std::vector<std::string>{"000", "011", "100"}, "negation table");
    c.expect(mu == std::vector<std::string>{"011", "100"}, "mu table");
    c.expect(nu == std::vector<std::uint64_t>{0b011, 0b100, 0b101, 0b110, 0b111}, "nu table");
    c.expect(tau == std::vector<std::uint64_t>{0b101, 0b110, 0b111}, "tau table");
    c.expect(lambda == std::vector<std::string>{"101", "110"}, "lambda table");
    c.expect(elapsed < 1.0, "runtime 1 ms");
    return c.ok;
}

// ---------------------------------------------------------------- criterion 2

bool fano_profile(Check& c, double& elapsed) {
    const auto t0 = Clock::now();
    const Report r = analyze(family("fano"));
    elapsed = ms_since(t0);
    c.expect(r.proper, "proper");
    c.expect(r.strong, "strong");
    c.expect(r.decisive, "decisive");
    c.expect(!r.regular, "not regular");
    c.expect(!r.linear, "not linear");
    c.expect(!r.weighted, "not weighted");
    c.expect(elapsed < 1000.0, "runtime 1 s");
    return c.ok;
}

// ---------------------------------------------------------------- criterion 3

bool nine_player_suite(Check& c, double& elapsed) {
    const auto t0 = Clock::now();
    const Hypergraph ex4 = family("example4");
    c.expect(is_regular(ex4).regular, "regular");

    const WeightednessResult w = is_weighted(SimpleGame{ex4});
    c.expect(!w.weighted() && w.reason == NotWeightedReason::Infeasible, "not weighted");

    NonWeightedCertificate cert;
    cert.u = {1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0};
    cert.u_prime = cert.u;
    c.expect(verify_nonweighted_certificate(ex4, cert), "published certificate verifies");
    unsigned total = 0;
    for (unsigned v : cert.u) total += v;
    c.expect(total == 4, "certificate total 4");
    for (int a = 1; a <= 9; ++a) {
        unsigned s = 0;
        for (std::size_t i = 0; i < ex4.edges.size(); ++i)
            if (ex4.edges[i].contains(a)) s += cert.u[i];
        c.expect(s == 2, "certificate column sums 2");
    }

    c.expect(regular_is_decisive(ex4), "decisive");
    c.expect(rows_of(shift_minimize(ex4).as_hypergraph()) == rows_of(family("example5")),
             "economic specification rows");
    elapsed = ms_since(t0);
    c.expect(elapsed < 1000.0, "runtime 1 s");
    return c.ok;
}

// ---------------------------------------------------------------- criterion 4

bool matching_blowup(Check& c, double& elapsed) {
    double slowest = 0;
    for (int m = 2; m <= 15; ++m) {
        const Hypergraph h = family("example3", m);
        const auto t0 = Clock::now();
        const Hypergraph lambda = minimal_transversals(h);
        const double t = ms_since(t0);
        if (m == 15) slowest = t;
        c.expect(lambda.size() == (std::size_t{1} << m), "lambda size 2^m at m=" + std::to_string(m));
        if (2 * m <= kDefaultOracleLimit)
            c.expect(brute_transversal_kernel(h).same_edge_set(lambda),
                     "oracle agreement at m=" + std::to_string(m));
        // the family is not linear, so the regular-game dualizer refuses it
        c.expect(!is_regular(h).regular || m < 2, "not regular at m=" + std::to_string(m));
        bool refused = false;
        try {
            regular_transversal_kernel(h);
        } catch (const NotRegular&) {
            refused = true;
        }
        c.expect(refused, "regular dualizer refuses m=" + std::to_string(m));
    }
    elapsed = slowest;
    c.expect(slowest < 10'000.0, "m=15 under 10 s");
    return c.ok;
}

// ---------------------------------------------------------------- criterion 5

bool size_bound(Check& c, double& elapsed) {
    const auto t0 = Clock::now();
    std::atomic<int> violations{0};
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < 1000; ++i) {
        Rng rng(7000 + i);
        const int n = 1 + i % 10;
        const Hypergraph h = random_regular_kernel(rng, n);
        const Hypergraph lambda = regular_transversal_kernel(h);
        if (lambda.size() > static_cast<std::size_t>(n) * h.size() + 1) ++violations;
    }
    elapsed = ms_since(t0);
    c.expect(violations == 0, "size bound violations: " + std::to_string(violations));
    return c.ok;
}

// ---------------------------------------------------------------- criterion 6

// weightedness decided without the synthesis pipeline: totality of the
// desirability relation, then exact separation of bitmap-derived winners
// and losers
bool oracle_weighted(const Hypergraph& kernel, const std::vector<std::uint8_t>& win) {
    const int n = kernel.n;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            bool a_ge_b = true, b_ge_a = true;
            for (std::uint64_t m = 0; m < total && (a_ge_b || b_ge_a); ++m) {
                if ((m >> a & 1) || (m >> b & 1)) continue;
                const bool wa = win[m | (std::uint64_t{1} << a)];
                const bool wb = win[m | (std::uint64_t{1} << b)];
                if (wb && !wa) a_ge_b = false;
                if (wa && !wb) b_ge_a = false;
            }
            if (!a_ge_b && !b_ge_a) return false; // not even linear
        }
    const Hypergraph winners = lattice::minimal_members(win, n);
    const Hypergraph losers = lattice::maximal_nonmembers(win, n);
    const int nvars = n + 1;
    std::vector<LinearConstraint> cons;
    auto coeff = [&](const Coalition& z) {
        std::vector<Rational> v(static_cast<std::size_t>(nvars), Rational(0));
        for (int a = 1; a <= n; ++a)
            if (z.contains(a)) v[static_cast<std::size_t>(a - 1)] = 1;
        v[static_cast<std::size_t>(n)] = -1;
        return v;
    };
    for (const Coalition& x : winners.edges) cons.push_back({coeff(x), Rel::GreaterEq, Rational(0)});
    for (const Coalition& y : losers.edges) cons.push_back({coeff(y), Rel::LessEq, Rational(-1)});
    return linear_feasibility(nvars, cons, std::vector<bool>(static_cast<std::size_t>(nvars), true))
        .has_value();
}

bool battery(const Hypergraph& h, const Hypergraph& other, std::string& why) {
    const int n = h.n;
    const std::uint64_t total = std::uint64_t{1} << n;
    const auto win = lattice::up_closure(h);
    const auto owin = lattice::up_closure(other);

    // pair verdicts against the quantifier scans
    bool coh = true, com = true;
    for (std::uint64_t m = 0; m < total; ++m) {
        const std::uint64_t comp = (total - 1) ^ m;
        if (win[m] && owin[comp]) coh = false;
        if (!win[m] && !owin[comp]) com = false;
    }
    const CoherenceResult cr = is_coherent(h, other);
    const CompletenessResult cm = is_complete(h, other);
    if (cr.coherent != coh) { why = "coherence"; return false; }
    if (cm.complete != com) { why = "completeness"; return false; }
    if (!cm.complete) {
        const Coalition z = *cm.witness;
        if (responds(h, z) || responds(other, z.complement())) { why = "witness"; return false; }
    }
    const DualityVerdict dv = is_dual_pair(h, other);
    if (dv.dual() != (coh && com)) { why = "dual pair"; return false; }

    // game verdicts
    const OracleProperties p = oracle_properties(h);
    const SimpleGame g{h};
    if (game_is_proper(g) != p.proper) { why = "proper"; return false; }
    if (game_is_strong(g).complete != p.strong) { why = "strong"; return false; }
    if (game_is_decisive(g) != p.decisive) { why = "decisive"; return false; }

    // regular dualization on regular instances
    if (is_regular(h).regular &&
        !regular_transversal_kernel(h).same_edge_set(brute_transversal_kernel(h))) {
        why = "regular dualization";
        return false;
    }

    // threshold synthesis against the separation oracle
    const bool wo = oracle_weighted(h, win);
    if (is_weighted(g).weighted() != wo) { why = "weighted"; return false; }
    if ((is_majority(g).kind == MajorityKind::Majority) != (wo && p.decisive)) {
        why = "majority";
        return false;
    }
    return true;
}

bool oracle_equivalence(Check& c, double& elapsed) {
    const auto t0 = Clock::now();
    std::atomic<long long> failures{0};
    std::string first_why;

    // exhaustive over every antichain on up to 5 players, paired with itself,
    // its dual and its successor in enumeration order
    for (int n = 1; n <= 5 && failures == 0; ++n) {
        std::vector<Hypergraph> all;
        enumerate_antichains(n, EnumOrder::Subset, [&](const Hypergraph& h) {
            all.push_back(h);
            return true;
        });
#pragma omp parallel for schedule(dynamic, 16)
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (failures != 0) continue;
            std::string why;
            const Hypergraph& h = all[i];
            const Hypergraph partners[3] = {h, brute_transversal_kernel(h),
                                            all[(i + 1) % all.size()]};
            for (const Hypergraph& k : partners)
                if (!battery(h, k, why)) {
                    ++failures;
#pragma omp critical
                    if (first_why.empty()) first_why = why + " at n=" + std::to_string(n);
                }
        }
    }

    // ten thousand random antichains on up to 12 players
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < 10000; ++i) {
        if (failures != 0) continue;
        Rng rng(90000 + i);
        const int n = 1 + i % 12;
        const Hypergraph h = i % 5 == 4 ? random_regular_kernel(rng, std::min(n, 10))
                                        : random_antichain(rng, n);
        const Hypergraph k = random_antichain(rng, h.n);
        std::string why;
        if (!battery(h, h, why) || !battery(h, k, why)) {
            ++failures;
#pragma omp critical
            if (first_why.empty()) first_why = why + " at sample " + std::to_string(i);
        }
    }
    elapsed = ms_since(t0);
    c.expect(failures == 0, "disagreements: " + std::to_string(failures) + " (" + first_why + ")");
    c.expect(elapsed < 300'000.0, "runtime 5 min");
    return c.ok;
}

// ---------------------------------------------------------------- criterion 7

bool reduction_correctness(Check& c, double& elapsed) {
    const auto t0 = Clock::now();

    // the gadget identity, exhaustively up to 5 original players
    for (int n = 1; n <= 5; ++n) {
        const Hypergraph g = gadget(n);
        const auto win = lattice::shift_closure(g);
        const std::uint64_t total = std::uint64_t{1} << (2 * n);
        std::vector<bool> image(total, false);
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
            image[embed_T(Coalition(a, n), n).bits] = true;
        for (std::uint64_t m = 0; m < total; ++m) {
            const bool trans = !win[(total - 1) ^ m];
            if (trans != (win[m] || image[m])) {
                c.expect(false, "gadget identity at n=" + std::to_string(n));
                break;
            }
        }
    }

    const auto embedded_coherent = [](const Hypergraph& hp, const Hypergraph& kp) {
        const auto hw = lattice::shift_closure(hp);
        const auto kw = lattice::shift_closure(kp);
        const std::uint64_t total = std::uint64_t{1} << hp.n;
        std::pair<bool, bool> out{true, true}; // coherent, complete
        for (std::uint64_t m = 0; m < total; ++m) {
            if (hw[m] && kw[(total - 1) ^ m]) out.first = false;
            if (!hw[m] && !kw[(total - 1) ^ m]) out.second = false;
        }
        return out;
    };

    // transfer of coherence and completeness, exhaustive on 4 players
    {
        std::vector<Hypergraph> all;
        enumerate_antichains(4, EnumOrder::Subset, [&](const Hypergraph& h) {
            all.push_back(h);
            return true;
        });
        std::atomic<int> bad{0};
#pragma omp parallel for schedule(dynamic, 8)
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = 0; j < all.size(); ++j) {
                const EmbeddedPair p = reduce_pair(all[i], all[j]);
                const auto [coh, com] = embedded_coherent(p.hp, p.kp);
                if (coh != is_coherent(all[i], all[j]).coherent ||
                    com != is_complete(all[i], all[j]).complete)
                    ++bad;
            }
        }
        c.expect(bad == 0, "transfer failures on 4 players: " + std::to_string(bad));
    }

    // randomized pairs on up to 6 players
    {
        std::atomic<int> bad{0};
#pragma omp parallel for schedule(dynamic, 8)
        for (int i = 0; i < 1000; ++i) {
            Rng rng(61000 + i);
            const int n = 1 + i % 6;
            const Hypergraph h = random_antichain(rng, n);
            const Hypergraph k = random_antichain(rng, n);
            const EmbeddedPair p = reduce_pair(h, k);
            const auto [coh, com] = embedded_coherent(p.hp, p.kp);
            if (coh != is_coherent(h, k).coherent || com != is_complete(h, k).complete) ++bad;
        }
        c.expect(bad == 0, "randomized transfer failures: " + std::to_string(bad));
    }

    // the published embedded table
    const EmbeddedPair p = reduce_pair(family("example3", 2), game(4, {"1010", "1001", "0110", "0101"}));
    c.expect(rows_of(p.hp) == std::vector<std::string>{"10100101", "01011010", "11000000",
                                                       "01110000", "01011100", "01010111"},
             "embedded H table");
    c.expect(rows_of(p.kp) == std::vector<std::string>{"10011001", "10010110", "01101001",
                                                       "01100110", "11000000", "01110000",
                                                       "01011100", "01010111"},
             "embedded K table");

    elapsed = ms_since(t0);
    c.expect(elapsed < 60'000.0, "runtime 1 min");
    return c.ok;
}

// ---------------------------------------------------------------- criterion 8

bool measure_ratio(Check& c, double& elapsed) {
    const auto t0 = Clock::now();
    auto binom = [](int n, int k) {
        unsigned long long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (int m = 2; m <= 7; ++m) {
        const Hypergraph g = family("gamma", m);
        c.expect(g.size() == binom(2 * m, m), "kernel size C(2m,m) at m=" + std::to_string(m));
        const RegularKernel mu_prime = shift_minimize(g);
        c.expect(mu_prime.edges.size() == 1, "one shift-minimal edge at m=" + std::to_string(m));
        if (mu_prime.edges.size() == 1)
            c.expect(mu_prime.edges[0].bits == (std::uint64_t{1} << m) - 1,
                     "shift-minimal edge is the weakest m players");
        const GameStats stats{g.bit_size(), mu_prime.as_hypergraph().bit_size()};
        c.expect(stats.simple_measure == binom(2 * m, m) * *stats.regular_measure,
                 "measure ratio C(2m,m) at m=" + std::to_string(m));
    }
    elapsed = ms_since(t0);
    c.expect(elapsed < 10'000.0, "runtime 10 s");
    return c.ok;
}

// ---------------------------------------------------------------- criterion 9

bool small_census(Check& c, double& elapsed) {
    const auto t0 = Clock::now();
    for (int n = 1; n <= 6; ++n) {
        CensusOptions opts;
        opts.n = n;
        opts.filter = "regular,decisive,!weighted";
        const CensusCounts counts = run_census(opts);
        c.expect(counts.matching == 0,
                 "regular decisive non-weighted kernels at n=" + std::to_string(n) + ": " +
                     std::to_string(counts.matching));
        if (n <= 4) { // sanity: the filtered class itself is populated
            CensusOptions base = opts;
            base.filter = "regular,decisive";
            c.expect(run_census(base).matching > 0, "no regular decisive kernels at all");
        }
    }
    // the full nine-player census is out of desk-scale reach; the long-running
    // path only exists behind its flag
    bool gated = false;
    try {
        CensusOptions opts;
        opts.n = 9;
        run_census(opts);
    } catch (const GroundSetTooLarge&) {
        gated = true;
    }
    c.expect(gated, "long-running gate");
    elapsed = ms_since(t0);
    return c.ok;
}

// --------------------------------------------------------------- criterion 10

bool criterion_substitution(Check& c, double& elapsed) {
    const auto t0 = Clock::now();
    std::atomic<int> failures{0};
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < 10000; ++i) {
        Rng rng(100000 + i);
        const int n = 1 + i % 10;
        const RandomWeightedGame rw = random_weighted_game(rng, n);
        const WeightednessResult r = is_weighted(SimpleGame{rw.kernel});
        if (!r.weighted()) { ++failures; continue; }
        const auto win = lattice::up_closure(rw.kernel);
        const Hypergraph losers = lattice::maximal_nonmembers(win, n);
        bool exact = true;
        for (const Rational& w : r.criterion->weights)
            if (w < 0) exact = false;
        for (const Coalition& x : rw.kernel.edges)
            if (r.criterion->weight_of(x) < r.criterion->quota) exact = false;
        for (const Coalition& y : losers.edges)
            if (r.criterion->weight_of(y) > r.criterion->quota - 1) exact = false;
        if (!exact) ++failures;
    }
    elapsed = ms_since(t0);
    c.expect(failures == 0, "substitution failures: " + std::to_string(failures));
    return c.ok;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(Check&, double&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "golden operator tables", golden_tables},
        {2, "fano plane profile", fano_profile},
        {3, "nine-player regular non-weighted suite", nine_player_suite},
        {4, "matching-family transversal blow-up", matching_blowup},
        {5, "regular dualization size bound", size_bound},
        {6, "oracle equivalence battery", oracle_equivalence},
        {7, "regular embedding correctness", reduction_correctness},
        {8, "quota-game measure inflation", measure_ratio},
        {9, "small census: regular+decisive implies weighted", small_census},
        {10, "threshold criteria substitute exactly", criterion_substitution},
    };
    int failed = 0;
    for (const Criterion& cr : criteria) {
        Check check;
        double elapsed = 0;
        bool ok = false;
        const auto t0 = Clock::now();
        try {
            ok = cr.run(check, elapsed);
        } catch (const std::exception& e) {
            check.ok = false;
            check.detail = std::string("exception: ") + e.what();
        }
        if (elapsed == 0) elapsed = ms_since(t0);
        std::printf("criterion %2d: %s  %-45s (%.1f ms)%s%s\n", cr.id, ok ? "PASS" : "FAIL",
                    cr.name, elapsed, check.detail.empty() ? "" : "  -- ",
                    check.detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    return failed;
}
