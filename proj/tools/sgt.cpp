#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sgt/enumerate.hpp"
#include "sgt/families.hpp"
#include "sgt/gamefile.hpp"
#include "sgt/oracle.hpp"
#include "sgt/reduction.hpp"
#include "sgt/report.hpp"
#include "sgt/transversal.hpp"

namespace {

int run_analyze(const std::string& path, sgt::AnalyzeOptions opts, bool kv,
                const std::string& assert_prop) {
    const sgt::Hypergraph h = sgt::load_game(path);
    const sgt::Report r = sgt::analyze(h, opts);
    if (kv)
        sgt::print_report_kv(std::cout, r);
    else
        sgt::print_report_text(std::cout, r);
    if (!assert_prop.empty() && !sgt::report_property(r, assert_prop)) return 1;
    return 0;
}

int run_dual(const std::string& path, int oracle_limit) {
    const sgt::Hypergraph h = sgt::load_game(path);
    const sgt::Hypergraph kernel = sgt::minimize(h);
    sgt::Hypergraph dual(kernel.n);
    if (sgt::is_regular(kernel).regular)
        dual = sgt::regular_transversal_kernel(kernel);
    else if (kernel.n <= oracle_limit)
        dual = sgt::brute_transversal_kernel(kernel, oracle_limit);
    else
        dual = sgt::minimal_transversals(kernel);
    sgt::serialize_game(std::cout, dual);
    return 0;
}

int run_reduce(const std::string& path, bool minimize_shift) {
    const sgt::Hypergraph h = sgt::load_game(path);
    const sgt::SimpleGame g(h);
    sgt::serialize_game(std::cout, sgt::reduce_game(g, minimize_shift));
    return 0;
}

int run_oracle(const std::string& path, int oracle_limit) {
    const sgt::Hypergraph h = sgt::load_game(path);
    const sgt::OracleProperties p = sgt::oracle_properties(h, oracle_limit);
    const sgt::Hypergraph lambda = sgt::brute_transversal_kernel(h, oracle_limit);
    std::cout << "proper=" << (p.proper ? "true" : "false") << "\n"
              << "strong=" << (p.strong ? "true" : "false") << "\n"
              << "decisive=" << (p.decisive ? "true" : "false") << "\n"
              << "transversal_kernel_edges=" << lambda.size() << "\n";
    sgt::serialize_game(std::cout, lambda);
    return 0;
}

int run_enumerate(const sgt::CensusOptions& opts, bool stream) {
    sgt::CensusCounts counts;
    if (stream) {
        counts = sgt::run_census(opts, [](const sgt::Hypergraph& h) {
            sgt::serialize_game(std::cout, h);
            std::cout << "\n";
        });
    } else {
        counts = sgt::run_census(opts);
    }
    std::cout << "# labelled kernels over " << opts.n << " players"
              << (opts.order == sgt::EnumOrder::Shift ? " (shift order)" : "") << "\n";
    std::cout << "total=" << counts.total << "\n";
    std::cout << "proper=" << counts.count_proper() << "\n";
    std::cout << "strong=" << counts.count_strong() << "\n";
    std::cout << "decisive=" << counts.count_decisive() << "\n";
    std::cout << "regular=" << counts.count_regular() << "\n";
    for (int i = 0; i < 8; ++i) {
        std::cout << "combo_" << ((i & 1) ? "proper" : "improper") << "_"
                  << ((i & 2) ? "strong" : "weak") << "_" << ((i & 4) ? "regular" : "irregular")
                  << "=" << counts.combo[i] << "\n";
    }
    if (!opts.filter.empty()) std::cout << "matching=" << counts.matching << "\n";
    return 0;
}

int run_family(const std::string& name, int m) {
    sgt::serialize_game(std::cout, sgt::family(name, m));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural analysis of simple games given their minimal winning coalitions"};
    app.require_subcommand(1);

    std::string file, mode = "simple", assert_prop, filter, checkpoint, fam_name;
    bool emit_dual = false, emit_shift = false, certify = false, raw = false, kv = false;
    bool minimize_shift = false, allow_long = false, stream = false, no_parallel = false;
    int oracle_limit = sgt::kDefaultOracleLimit;
    unsigned cert_bound = 4;
    int enum_n = 3, fam_m = 0;

    auto* analyze = app.add_subcommand("analyze", "full property report for a game file");
    analyze->add_option("file", file)->required();
    analyze->add_option("--mode", mode)->check(CLI::IsMember({"simple", "regular"}));
    analyze->add_flag("--emit-dual", emit_dual);
    analyze->add_flag("--emit-shift-kernel", emit_shift);
    analyze->add_flag("--certify", certify, "search for a non-weightedness certificate");
    analyze->add_flag("--raw", raw, "minimize a non-antichain input");
    analyze->add_flag("--json-like", kv, "line-oriented key=value output");
    analyze->add_option("--assert", assert_prop, "exit 1 unless the property holds");
    analyze->add_option("--oracle-limit", oracle_limit);
    analyze->add_option("--cert-bound", cert_bound, "total multiplicity bound of the search");

    auto* dual = app.add_subcommand("dual", "transversal kernel of a game file");
    dual->add_option("file", file)->required();
    dual->add_option("--oracle-limit", oracle_limit);

    auto* reduce = app.add_subcommand("reduce", "embed into a regular game over 2n players");
    reduce->add_option("file", file)->required();
    reduce->add_flag("--minimize", minimize_shift, "shift-minimize the embedded kernel");

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive kernel census");
    enumerate->add_option("--n", enum_n)->required();
    enumerate->add_option("--filter", filter, "comma-separated properties, '!' negates");
    enumerate->add_option("--mode", mode)->check(CLI::IsMember({"simple", "regular"}));
    enumerate->add_flag("--allow-long-running", allow_long);
    enumerate->add_flag("--stream", stream, "print every kernel matching the filter");
    enumerate->add_flag("--serial", no_parallel);
    enumerate->add_option("--checkpoint", checkpoint, "resumable progress file");

    auto* family = app.add_subcommand("family", "emit a named instance");
    family->add_option("name", fam_name)->required();
    family->add_option("--m", fam_m);

    auto* oracle = app.add_subcommand("oracle", "exhaustive cross-check of a game file");
    oracle->add_option("file", file)->required();
    oracle->add_option("--oracle-limit", oracle_limit);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            sgt::AnalyzeOptions opts;
            opts.mode = mode == "regular" ? sgt::AnalyzeOptions::Mode::Regular
                                          : sgt::AnalyzeOptions::Mode::Simple;
            opts.raw = raw;
            opts.emit_dual = emit_dual;
            opts.emit_shift_kernel = emit_shift;
            opts.certify = certify;
            opts.certificate_bound = cert_bound;
            opts.oracle_limit = oracle_limit;
            return run_analyze(file, opts, kv, assert_prop);
        }
        if (dual->parsed()) return run_dual(file, oracle_limit);
        if (reduce->parsed()) return run_reduce(file, minimize_shift);
        if (enumerate->parsed()) {
            sgt::CensusOptions opts;
            opts.n = enum_n;
            opts.filter = filter;
            opts.order = mode == "regular" ? sgt::EnumOrder::Shift : sgt::EnumOrder::Subset;
            opts.allow_long_running = allow_long;
            opts.parallel = !no_parallel;
            opts.checkpoint_path = checkpoint;
            return run_enumerate(opts, stream);
        }
        if (family->parsed()) return run_family(fam_name, fam_m);
        if (oracle->parsed()) return run_oracle(file, oracle_limit);
    } catch (const sgt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
