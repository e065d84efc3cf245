#include "sgt/report.hpp"

#include <cassert>
#include <chrono>
#include <ostream>

#include "sgt/gamefile.hpp"
#include "sgt/oracle.hpp"
#include "sgt/transversal.hpp"

namespace sgt {

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
};

// expand a shift-kernel into the ordinary kernel mu(W) of its regular game
Hypergraph expand_shift_kernel(const RegularKernel& hp, int oracle_limit) {
    require_oracle_size(hp.n, oracle_limit);
    const auto win = lattice::shift_closure(hp.as_hypergraph());
    return lattice::minimal_members(win, hp.n);
}

} // namespace

Report analyze(const Hypergraph& input, const AnalyzeOptions& opts) {
    Report r;
    Hypergraph kernel = input;
    if (opts.mode == AnalyzeOptions::Mode::Regular) {
        const RegularKernel hp(input); // validates the shift-antichain
        r.stats.regular_measure = hp.as_hypergraph().bit_size();
        kernel = expand_shift_kernel(hp, opts.oracle_limit);
    } else if (!kernel.is_antichain()) {
        if (!opts.raw) throw NotAntichain("input is not an antichain; pass --raw to minimize it");
        kernel = minimize(kernel);
    }
    const SimpleGame game(kernel);
    r.n = kernel.n;
    r.kernel_edges = kernel.size();
    r.stats.simple_measure = kernel.bit_size();

    Stopwatch total;
    {
        Stopwatch t;
        const CoherenceResult c = is_coherent(kernel, kernel);
        r.proper = c.coherent;
        if (!c.coherent) r.properness_witness = c.witness;
        r.timings_ms["proper"] = t.ms();
    }
    {
        Stopwatch t;
        const CompletenessResult c = game_is_strong(game);
        r.strong = c.complete;
        if (!c.complete) r.strongness_witness = c.witness;
        r.timings_ms["strong"] = t.ms();
    }
    r.decisive = r.proper && r.strong;
    {
        Stopwatch t;
        r.regular = is_regular(kernel).regular;
        r.order = find_regular_order(kernel);
        r.linear = r.order.has_value();
        r.timings_ms["regular"] = t.ms();
    }
    if (r.linear) {
        const Hypergraph relabeled = r.order->relabel(kernel);
        r.stats.regular_measure = shift_minimize(relabeled).as_hypergraph().bit_size();
    }
    {
        Stopwatch t;
        WeightednessResult w = is_weighted(game);
        r.weighted = w.weighted();
        if (w.criterion) r.criterion = std::move(w.criterion);
        WeightednessResult h = is_homogeneous(game);
        r.homogeneous = h.weighted();
        if (h.criterion) r.homogeneous_criterion = std::move(h.criterion);
        const MajorityResult m = is_majority(game);
        r.majority = m.kind == MajorityKind::Majority;
        r.submajority = m.kind != MajorityKind::Neither;
        r.timings_ms["weighted"] = t.ms();
    }
    if (opts.emit_dual) {
        Stopwatch t;
        if (r.regular)
            r.dual = regular_transversal_kernel(kernel);
        else if (kernel.n <= opts.oracle_limit)
            r.dual = brute_transversal_kernel(kernel, opts.oracle_limit);
        else
            r.dual = minimal_transversals(kernel);
        r.timings_ms["dual"] = t.ms();
    }
    if (opts.emit_shift_kernel) {
        if (!r.linear) throw NotRegular("no shift kernel: the game is not linear");
        const Hypergraph relabeled = r.order->relabel(kernel);
        Hypergraph mu = shift_minimize(relabeled).as_hypergraph();
        if (!r.order->is_identity()) {
            std::vector<Coalition> back;
            back.reserve(mu.edges.size());
            for (const Coalition& x : mu.edges) back.push_back(r.order->restore(x));
            mu = Hypergraph(kernel.n, std::move(back));
        }
        r.shift_kernel = std::move(mu);
    }
    if (opts.certify && !r.weighted && !kernel.edges.empty()) {
        Stopwatch t;
        if (auto c = search_nonweighted_certificate(kernel, opts.certificate_bound)) {
            assert(verify_nonweighted_certificate(kernel, *c));
            r.certificate = std::move(c);
        }
        r.timings_ms["certificate"] = t.ms();
    }
    r.timings_ms["total"] = total.ms();

    // verdict dependencies
    assert(!r.decisive || (r.proper && r.strong));
    assert(!r.majority || (r.weighted && r.decisive));
    assert(!r.submajority || (r.weighted && r.strong));
    assert(!r.weighted || r.linear);
    if (r.properness_witness)
        assert(responds(kernel, r.properness_witness->first) &&
               responds(kernel, r.properness_witness->second) &&
               !r.properness_witness->first.intersects(r.properness_witness->second));
    if (r.strongness_witness)
        assert(!responds(kernel, *r.strongness_witness) &&
               !responds(kernel, r.strongness_witness->complement()));
    return r;
}

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string criterion_string(const ThresholdCriterion& c) {
    std::string s = "q=" + c.quota.str() + " p=(";
    for (std::size_t i = c.weights.size(); i-- > 0;) {
        s += c.weights[i].str();
        if (i) s += ",";
    }
    return s + ") [player n first]";
}

std::string order_string(const PlayerOrdering& o) {
    // players from strongest to weakest
    std::string s;
    for (int r = static_cast<int>(o.rank.size()); r >= 1; --r)
        for (std::size_t a = 0; a < o.rank.size(); ++a)
            if (o.rank[a] == r) {
                if (!s.empty()) s += " ";
                s += std::to_string(a + 1);
            }
    return s;
}

} // namespace

void print_report_text(std::ostream& out, const Report& r) {
    out << "players:       " << r.n << "\n";
    out << "kernel edges:  " << r.kernel_edges << "\n";
    out << "proper:        " << yn(r.proper);
    if (r.properness_witness)
        out << "   (disjoint winners " << r.properness_witness->first.to_string() << ", "
            << r.properness_witness->second.to_string() << ")";
    out << "\n";
    out << "strong:        " << yn(r.strong);
    if (r.strongness_witness)
        out << "   (losing pair " << r.strongness_witness->to_string() << " / "
            << r.strongness_witness->complement().to_string() << ")";
    out << "\n";
    out << "decisive:      " << yn(r.decisive) << "\n";
    out << "regular:       " << yn(r.regular) << "\n";
    out << "linear:        " << yn(r.linear);
    if (r.order) out << "   (order " << order_string(*r.order) << ")";
    out << "\n";
    out << "weighted:      " << yn(r.weighted);
    if (r.criterion) out << "   (" << criterion_string(*r.criterion) << ")";
    out << "\n";
    out << "homogeneous:   " << yn(r.homogeneous);
    if (r.homogeneous_criterion) out << "   (" << criterion_string(*r.homogeneous_criterion) << ")";
    out << "\n";
    out << "majority:      " << yn(r.majority) << "\n";
    out << "submajority:   " << yn(r.submajority) << "\n";
    out << "simple-measure: " << r.stats.simple_measure << "\n";
    if (r.stats.regular_measure) out << "regular-measure: " << *r.stats.regular_measure << "\n";
    if (r.certificate) {
        out << "non-weighted certificate u:  ";
        for (std::size_t i = 0; i < r.certificate->u.size(); ++i)
            out << (i ? " " : "") << r.certificate->u[i];
        out << "\nnon-weighted certificate u': ";
        for (std::size_t i = 0; i < r.certificate->u_prime.size(); ++i)
            out << (i ? " " : "") << r.certificate->u_prime[i];
        out << "\n";
    }
    if (r.dual) {
        out << "dual kernel:\n";
        serialize_game(out, *r.dual);
    }
    if (r.shift_kernel) {
        out << "shift kernel:\n";
        serialize_game(out, *r.shift_kernel);
    }
    out << "time-ms: " << r.timings_ms.at("total") << "\n";
}

void print_report_kv(std::ostream& out, const Report& r) {
    out << "players=" << r.n << "\n";
    out << "kernel_edges=" << r.kernel_edges << "\n";
    out << "proper=" << (r.proper ? "true" : "false") << "\n";
    out << "strong=" << (r.strong ? "true" : "false") << "\n";
    out << "decisive=" << (r.decisive ? "true" : "false") << "\n";
    out << "regular=" << (r.regular ? "true" : "false") << "\n";
    out << "linear=" << (r.linear ? "true" : "false") << "\n";
    out << "weighted=" << (r.weighted ? "true" : "false") << "\n";
    out << "homogeneous=" << (r.homogeneous ? "true" : "false") << "\n";
    out << "majority=" << (r.majority ? "true" : "false") << "\n";
    out << "submajority=" << (r.submajority ? "true" : "false") << "\n";
    out << "simple_measure=" << r.stats.simple_measure << "\n";
    if (r.stats.regular_measure) out << "regular_measure=" << *r.stats.regular_measure << "\n";
    if (r.order) out << "order=" << order_string(*r.order) << "\n";
    if (r.criterion) {
        out << "quota=" << r.criterion->quota.str() << "\n";
        out << "weights=";
        for (std::size_t i = r.criterion->weights.size(); i-- > 0;) {
            out << r.criterion->weights[i].str();
            if (i) out << ",";
        }
        out << "\n";
    }
    if (r.properness_witness)
        out << "properness_witness=" << r.properness_witness->first.to_string() << ","
            << r.properness_witness->second.to_string() << "\n";
    if (r.strongness_witness)
        out << "strongness_witness=" << r.strongness_witness->to_string() << "\n";
    if (r.certificate) {
        out << "certificate_u=";
        for (std::size_t i = 0; i < r.certificate->u.size(); ++i)
            out << (i ? " " : "") << r.certificate->u[i];
        out << "\ncertificate_u_prime=";
        for (std::size_t i = 0; i < r.certificate->u_prime.size(); ++i)
            out << (i ? " " : "") << r.certificate->u_prime[i];
        out << "\n";
    }
    for (const auto& [k, v] : r.timings_ms) out << "time_ms_" << k << "=" << v << "\n";
}

bool report_property(const Report& r, const std::string& name) {
    if (name == "proper") return r.proper;
    if (name == "strong") return r.strong;
    if (name == "decisive") return r.decisive;
    if (name == "regular") return r.regular;
    if (name == "linear") return r.linear;
    if (name == "weighted") return r.weighted;
    if (name == "homogeneous") return r.homogeneous;
    if (name == "majority") return r.majority;
    if (name == "submajority") return r.submajority;
    throw Error("unknown property '" + name + "'");
}

} // namespace sgt
