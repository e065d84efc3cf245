#include "sgt/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sgt/duality.hpp"
#include "sgt/oracle.hpp"
#include "sgt/regular.hpp"
#include "sgt/weighted.hpp"

namespace sgt {

unsigned long long CensusCounts::count_proper() const {
    unsigned long long s = 0;
    for (int i = 0; i < 8; ++i)
        if (i & 1) s += combo[i];
    return s;
}
unsigned long long CensusCounts::count_strong() const {
    unsigned long long s = 0;
    for (int i = 0; i < 8; ++i)
        if (i & 2) s += combo[i];
    return s;
}
unsigned long long CensusCounts::count_decisive() const {
    unsigned long long s = 0;
    for (int i = 0; i < 8; ++i)
        if ((i & 3) == 3) s += combo[i];
    return s;
}
unsigned long long CensusCounts::count_regular() const {
    unsigned long long s = 0;
    for (int i = 0; i < 8; ++i)
        if (i & 4) s += combo[i];
    return s;
}

namespace {

using Mask = std::uint64_t;

struct BitTable {
    int n = 0;
    std::size_t total = 0;
    std::size_t words = 0;
    std::vector<Mask> comp; // comparability bitsets, rows of `words` words

    BitTable(int n_, EnumOrder order) : n(n_) {
        total = std::size_t{1} << n;
        words = (total + 63) / 64;
        comp.assign(total * words, 0);
        for (std::size_t a = 0; a < total; ++a) {
            const Coalition ca(a, n);
            for (std::size_t b = 0; b < total; ++b) {
                bool related;
                if (order == EnumOrder::Subset) {
                    related = (a & ~b) == 0 || (b & ~a) == 0;
                } else {
                    const Coalition cb(b, n);
                    related = shift_leq(ca, cb) || shift_leq(cb, ca);
                }
                if (related) comp[a * words + b / 64] |= Mask{1} << (b % 64);
            }
        }
    }
};

struct Avail {
    std::vector<Mask> w;

    static Avail all(std::size_t total) {
        Avail a;
        a.w.assign((total + 63) / 64, ~Mask{0});
        const std::size_t used = total % 64;
        if (used) a.w.back() = (Mask{1} << used) - 1;
        return a;
    }
    // candidates strictly above m, incomparable to m
    Avail descend(const BitTable& t, std::size_t m) const {
        Avail a;
        a.w.resize(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) a.w[i] = w[i] & ~t.comp[m * t.words + i];
        const std::size_t wi = m / 64, bi = m % 64;
        for (std::size_t i = 0; i < wi; ++i) a.w[i] = 0;
        a.w[wi] &= bi == 63 ? 0 : ~((Mask{2} << bi) - 1);
        return a;
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            for (Mask rest = w[i]; rest; rest &= rest - 1)
                if (!f(i * 64 + static_cast<std::size_t>(std::countr_zero(rest)))) return;
    }
};

// Preorder DFS over antichains; every stack prefix is one. `visit` returns
// false to abort the walk.
struct Walker {
    const BitTable& table;
    const std::function<bool(const std::vector<Mask>&)>& visit;
    std::vector<Mask> cur;
    const std::vector<Mask>* resume = nullptr; // last visited path, skipped on replay
    bool stopped = false;

    void run() {
        const Avail a = Avail::all(table.total);
        step(a, resume != nullptr);
    }

    void step(const Avail& avail, bool resuming) {
        if (stopped) return;
        if (!resuming && !visit(cur)) { stopped = true; return; }
        if (resuming && cur.size() == resume->size()) resuming = false;
        bool level_resuming = resuming;
        avail.for_each([&](std::size_t m) {
            bool child_resuming = false;
            if (level_resuming) {
                const Mask target = (*resume)[cur.size()];
                if (m < target) return true;
                child_resuming = m == target;
                if (!child_resuming) level_resuming = false;
            }
            cur.push_back(m);
            step(avail.descend(table, m), child_resuming);
            cur.pop_back();
            if (child_resuming) level_resuming = false;
            return !stopped;
        });
    }
};

std::uint64_t reverse_word(std::uint64_t v) {
    v = ((v >> 1) & 0x5555555555555555ull) | ((v & 0x5555555555555555ull) << 1);
    v = ((v >> 2) & 0x3333333333333333ull) | ((v & 0x3333333333333333ull) << 2);
    v = ((v >> 4) & 0x0F0F0F0F0F0F0F0Full) | ((v & 0x0F0F0F0F0F0F0F0Full) << 4);
    v = ((v >> 8) & 0x00FF00FF00FF00FFull) | ((v & 0x00FF00FF00FF00FFull) << 8);
    v = ((v >> 16) & 0x0000FFFF0000FFFFull) | ((v & 0x0000FFFF0000FFFFull) << 16);
    return (v >> 32) | (v << 32);
}

// Lattice closures over at most 64 subsets packed in one word; the workhorse
// of the small-n census.
struct TinyLattice {
    int n;
    std::size_t total;
    Mask full;
    Mask with_player[6] = {0, 0, 0, 0, 0, 0};

    explicit TinyLattice(int n_) : n(n_), total(std::size_t{1} << n) {
        full = total == 64 ? ~Mask{0} : (Mask{1} << total) - 1;
        for (int b = 0; b < n; ++b)
            for (std::size_t m = 0; m < total; ++m)
                if (m >> b & 1) with_player[b] |= Mask{1} << m;
    }

    Mask up_closure(const std::vector<Mask>& edges) const {
        Mask w = 0;
        for (Mask e : edges) w |= Mask{1} << e;
        for (int b = 0; b < n; ++b)
            w |= (w & ~with_player[b]) << (std::size_t{1} << b);
        return w;
    }
    // membership indicator of {full-complement of members}
    Mask mirrored(Mask w) const { return reverse_word(w) >> (64 - total); }

    bool regular(const std::vector<Mask>& edges, Mask w) const {
        for (Mask e : edges)
            for (int b = 0; b + 1 < n; ++b)
                if ((e >> b & 1) && !(e >> (b + 1) & 1) &&
                    !(w >> ((e ^ (Mask{1} << b)) | (Mask{1} << (b + 1))) & 1))
                    return false;
        return true;
    }
};

struct CheapProps {
    bool proper = false, strong = false, regular = false;
};

// byte-per-subset evaluation, used beyond 6 players and for the shift order
struct WideLattice {
    int n;
    std::size_t total;

    explicit WideLattice(int n_) : n(n_), total(std::size_t{1} << n) {}

    std::vector<std::uint8_t> up_closure(const std::vector<Mask>& edges) const {
        std::vector<std::uint8_t> w(total, 0);
        for (Mask e : edges) w[e] = 1;
        for (int b = 0; b < n; ++b) {
            const std::size_t bit = std::size_t{1} << b;
            for (std::size_t m = 0; m < total; ++m)
                if (m & bit) w[m] |= w[m ^ bit];
        }
        return w;
    }
    std::vector<std::uint8_t> shift_closure(const std::vector<Mask>& edges) const {
        std::vector<std::uint8_t> w(total, 0);
        for (Mask e : edges) w[e] = 1;
        for (std::size_t m = 0; m < total; ++m) {
            if (!w[m]) continue;
            if (n >= 1 && !(m & 1)) w[m | 1] = 1;
            for (int j = 0; j + 1 < n; ++j) {
                const std::size_t lo = std::size_t{1} << j;
                if ((m & lo) && !(m & (lo << 1))) w[(m ^ lo) | (lo << 1)] = 1;
            }
        }
        return w;
    }
    std::vector<Mask> minimal(const std::vector<std::uint8_t>& w) const {
        std::vector<Mask> out;
        for (std::size_t m = 0; m < total; ++m) {
            if (!w[m]) continue;
            bool ok = true;
            for (std::size_t rest = m; rest && ok; rest &= rest - 1)
                ok = !w[m ^ (rest & (~rest + 1))];
            if (ok) out.push_back(m);
        }
        return out;
    }
    CheapProps props(const std::vector<Mask>& kernel) const {
        const auto w = up_closure(kernel);
        CheapProps p{true, true, true};
        for (std::size_t m = 0; m < total; ++m) {
            const bool a = w[m], b = w[total - 1 - m];
            if (a && b) p.proper = false;
            if (!a && !b) p.strong = false;
        }
        for (Mask e : kernel)
            for (int j = 0; p.regular && j + 1 < n; ++j)
                if ((e >> j & 1) && !(e >> (j + 1) & 1))
                    p.regular = w[(e ^ (Mask{1} << j)) | (Mask{1} << (j + 1))];
        return p;
    }
};

enum class Prop { Proper, Strong, Decisive, Regular, Linear, Weighted, Homogeneous, Majority, Submajority };

struct FilterTerm {
    Prop prop;
    bool negated;
};

std::vector<FilterTerm> parse_filter(const std::string& filter) {
    std::vector<FilterTerm> terms;
    std::stringstream ss(filter);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' ' || c == '\t'; }),
                  tok.end());
        if (tok.empty()) continue;
        bool neg = false;
        if (tok[0] == '!') { neg = true; tok.erase(0, 1); }
        Prop p;
        if (tok == "proper") p = Prop::Proper;
        else if (tok == "strong") p = Prop::Strong;
        else if (tok == "decisive") p = Prop::Decisive;
        else if (tok == "regular") p = Prop::Regular;
        else if (tok == "linear") p = Prop::Linear;
        else if (tok == "weighted") p = Prop::Weighted;
        else if (tok == "homogeneous") p = Prop::Homogeneous;
        else if (tok == "majority") p = Prop::Majority;
        else if (tok == "submajority") p = Prop::Submajority;
        else throw Error("unknown filter property '" + tok + "'");
        terms.push_back({p, neg});
    }
    return terms;
}

// One enumerated kernel under evaluation: cheap verdicts are precomputed, the
// game-level procedures run on demand.
struct KernelEval {
    int n;
    const std::vector<Mask>& kernel; // the simple kernel mu(W)
    CheapProps cheap;
    std::optional<bool> linear_, weighted_, homogeneous_;
    std::optional<MajorityKind> majority_;

    Hypergraph hypergraph() const {
        std::vector<Coalition> es;
        es.reserve(kernel.size());
        for (Mask m : kernel) es.emplace_back(m, n);
        return Hypergraph(n, std::move(es));
    }
    bool get(Prop p) {
        switch (p) {
            case Prop::Proper: return cheap.proper;
            case Prop::Strong: return cheap.strong;
            case Prop::Decisive: return cheap.proper && cheap.strong;
            case Prop::Regular: return cheap.regular;
            case Prop::Linear:
                if (!linear_) linear_ = find_regular_order(hypergraph()).has_value();
                return *linear_;
            case Prop::Weighted:
                if (!weighted_) weighted_ = is_weighted(SimpleGame(hypergraph())).weighted();
                return *weighted_;
            case Prop::Homogeneous:
                if (!homogeneous_) homogeneous_ = is_homogeneous(SimpleGame(hypergraph())).weighted();
                return *homogeneous_;
            case Prop::Majority:
                if (!majority_) majority_ = is_majority(SimpleGame(hypergraph())).kind;
                return *majority_ == MajorityKind::Majority;
            case Prop::Submajority:
                if (!majority_) majority_ = is_majority(SimpleGame(hypergraph())).kind;
                return *majority_ != MajorityKind::Neither;
        }
        return false;
    }
};

struct CensusContext {
    const CensusOptions& opts;
    std::vector<FilterTerm> terms;
    const TinyLattice* tiny = nullptr;
    const WideLattice* wide = nullptr;

    // visit one enumerated antichain; `simple` receives mu(W) (identical to the
    // enumerated masks in subset order, the closure's minimal members in shift
    // order)
    void account(const std::vector<Mask>& enumerated, CensusCounts& counts,
                 const std::function<void(const Hypergraph&)>& on_match) const {
        std::vector<Mask> expanded;
        const std::vector<Mask>* kernel = &enumerated;
        CheapProps cheap;
        if (opts.order == EnumOrder::Shift) {
            expanded = wide->minimal(wide->shift_closure(enumerated));
            kernel = &expanded;
            cheap = wide->props(*kernel);
        } else if (tiny) {
            const Mask w = tiny->up_closure(enumerated);
            const Mask mirror = tiny->mirrored(w);
            cheap.proper = (w & mirror) == 0;
            cheap.strong = (w | mirror) == tiny->full;
            cheap.regular = tiny->regular(enumerated, w);
        } else {
            cheap = wide->props(*kernel);
        }
        ++counts.total;
        ++counts.combo[(cheap.proper ? 1 : 0) | (cheap.strong ? 2 : 0) | (cheap.regular ? 4 : 0)];
        if (terms.empty() && !on_match) return;
        KernelEval eval{opts.n, *kernel, cheap, {}, {}, {}, {}};
        for (const FilterTerm& t : terms)
            if (eval.get(t.prop) == t.negated) return;
        ++counts.matching;
        if (on_match) {
            // emit the enumerated object itself
            std::vector<Coalition> es;
            es.reserve(enumerated.size());
            for (Mask m : enumerated) es.emplace_back(m, opts.n);
            on_match(Hypergraph(opts.n, std::move(es)));
        }
    }
};

void write_checkpoint(const std::string& path, const CensusCounts& c, const std::vector<Mask>& cur) {
    std::ofstream out(path, std::ios::trunc);
    out << c.total << ' ' << c.matching;
    for (int i = 0; i < 8; ++i) out << ' ' << c.combo[i];
    out << '\n';
    for (std::size_t i = 0; i < cur.size(); ++i) out << (i ? " " : "") << cur[i];
    out << '\n';
}

bool read_checkpoint(const std::string& path, CensusCounts& c, std::vector<Mask>& cur) {
    std::ifstream in(path);
    if (!in) return false;
    if (!(in >> c.total >> c.matching)) return false;
    for (int i = 0; i < 8; ++i)
        if (!(in >> c.combo[i])) return false;
    std::string rest;
    std::getline(in, rest);
    std::getline(in, rest);
    std::istringstream ss(rest);
    Mask m;
    cur.clear();
    while (ss >> m) cur.push_back(m);
    return true;
}

} // namespace

void enumerate_antichains(int n, EnumOrder order,
                          const std::function<bool(const Hypergraph&)>& visit) {
    if (n < 0 || n > kMaxEnumerationGround)
        throw GroundSetTooLarge("enumeration supports at most " +
                                std::to_string(kMaxEnumerationGround) + " players");
    const BitTable table(n, order);
    std::function<bool(const std::vector<Mask>&)> wrap = [&](const std::vector<Mask>& cur) {
        std::vector<Coalition> es;
        es.reserve(cur.size());
        for (Mask m : cur) es.emplace_back(m, n);
        return visit(Hypergraph(n, std::move(es)));
    };
    Walker w{table, wrap, {}, nullptr, false};
    w.run();
}

CensusCounts run_census(const CensusOptions& opts,
                        const std::function<void(const Hypergraph&)>& on_match) {
    if (opts.n < 0 || opts.n > kMaxEnumerationGround)
        throw GroundSetTooLarge("census supports at most " +
                                std::to_string(kMaxEnumerationGround) + " players");
    if (opts.n > kDefaultEnumerationLimit && !opts.allow_long_running)
        throw GroundSetTooLarge("census beyond " + std::to_string(kDefaultEnumerationLimit) +
                                " players requires --allow-long-running");

    CensusContext ctx{opts, parse_filter(opts.filter), nullptr, nullptr};
    TinyLattice tiny(std::min(opts.n, 6));
    WideLattice wide(opts.n);
    if (opts.order == EnumOrder::Subset && opts.n <= 6) ctx.tiny = &tiny;
    ctx.wide = &wide;

    const BitTable table(opts.n, opts.order);
    CensusCounts counts;

    const bool streaming = static_cast<bool>(on_match) || !opts.checkpoint_path.empty();
    if (streaming || !opts.parallel) {
        std::vector<Mask> resume_path;
        bool resuming = false;
        if (!opts.checkpoint_path.empty() && read_checkpoint(opts.checkpoint_path, counts, resume_path))
            resuming = true;
        unsigned long long since_checkpoint = 0;
        std::function<bool(const std::vector<Mask>&)> visit = [&](const std::vector<Mask>& cur) {
            ctx.account(cur, counts, on_match);
            if (!opts.checkpoint_path.empty() && ++since_checkpoint >= opts.checkpoint_every) {
                since_checkpoint = 0;
                write_checkpoint(opts.checkpoint_path, counts, cur);
            }
            return true;
        };
        Walker w{table, visit, {}, resuming ? &resume_path : nullptr, false};
        w.run();
        if (!opts.checkpoint_path.empty()) write_checkpoint(opts.checkpoint_path, counts, {});
        return counts;
    }

    // pure counting: shard on the first edge, merge is order-free
    ctx.account({}, counts, nullptr); // the empty antichain
    const std::int64_t total = std::int64_t{1} << opts.n;
#pragma omp parallel
    {
        CensusCounts local;
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t first = 0; first < total; ++first) {
            std::vector<Mask> seed = {static_cast<Mask>(first)};
            std::function<bool(const std::vector<Mask>&)> visit =
                [&](const std::vector<Mask>& cur) {
                    ctx.account(cur, local, nullptr);
                    return true;
                };
            Walker w{table, visit, seed, nullptr, false};
            w.step(Avail::all(table.total).descend(table, static_cast<std::size_t>(first)), false);
        }
#pragma omp critical
        {
            counts.total += local.total;
            counts.matching += local.matching;
            for (int i = 0; i < 8; ++i) counts.combo[i] += local.combo[i];
        }
    }
    return counts;
}

} // namespace sgt
