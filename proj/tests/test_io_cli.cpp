#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#ifndef _WIN32
#include <sys/wait.h>
#endif

#include "sgt/enumerate.hpp"
#include "sgt/families.hpp"
#include "sgt/gamefile.hpp"
#include "sgt/generators.hpp"
#include "sgt/oracle.hpp"
#include "sgt/report.hpp"
#include "support.hpp"

using namespace sgt;
using testsupport::game;
using testsupport::row;
using testsupport::rows_of;

TEST_CASE("parsing the published table text") {
    const Hypergraph h = parse_game_string("# worked example\n3\n011\n100\n111\n");
    CHECK(h.n == 3);
    CHECK(rows_of(h) == std::vector<std::string>{"011", "100", "111"});
}

TEST_CASE("round trips preserve row order") {
    Rng rng(51);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Hypergraph h = random_antichain(rng, n);
        const Hypergraph back = parse_game_string(serialize_game_string(h));
        CHECK(back.n == h.n);
        CHECK(rows_of(back) == rows_of(h));
    }
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_game_string("4\n0121\n"), ParseError);
    CHECK_THROWS_AS(parse_game_string("3\n01\n"), ParseError);
    CHECK_THROWS_AS(parse_game_string("3\n011\n011\n"), ParseError);
    CHECK_THROWS_AS(parse_game_string("abc\n"), ParseError);
    CHECK_THROWS_AS(parse_game_string("# only a comment\n"), ParseError);
    try {
        parse_game_string("# c\n4\n1100\n0121\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("named families") {
    CHECK(rows_of(family("fano")) ==
          std::vector<std::string>{"0000111", "0011010", "0101100", "0110001", "1001001",
                                   "1010100", "1100010"});
    CHECK(rows_of(family("example1")) == std::vector<std::string>{"011", "100", "111"});
    CHECK(rows_of(family("example3", 2)) == std::vector<std::string>{"1100", "0011"});
    CHECK(family("gamma", 3).size() == 20);
    for (const Coalition& x : family("gamma", 3).edges) CHECK(x.size() == 3);
    CHECK(family("example4").size() == 14);
    CHECK(family("example5").size() == 6);
    CHECK(family("matching-embedded", 2).size() == 6);
    CHECK_THROWS_AS(family("nosuch"), UnknownFamily);
    CHECK_THROWS_AS(family("gamma"), UnknownFamily); // missing m
}

TEST_CASE("census counts on one and three players") {
    CensusOptions o1;
    o1.n = 1;
    o1.filter = "decisive";
    const CensusCounts c1 = run_census(o1);
    CHECK(c1.total == 3);
    CHECK(c1.matching == 1);

    CensusOptions o3;
    o3.n = 3;
    const CensusCounts c3 = run_census(o3);
    CHECK(c3.total == 20);
    CHECK(c3.count_decisive() == 4);
}

TEST_CASE("census totals follow the monotone-family counts") {
    const unsigned long long dedekind[] = {2, 3, 6, 20, 168, 7581};
    for (int n = 0; n <= 5; ++n) {
        CensusOptions o;
        o.n = n;
        CHECK(run_census(o).total == dedekind[n]);
    }
}

TEST_CASE("census cheap verdicts match the exhaustive oracle") {
    for (int n = 1; n <= 4; ++n) {
        CensusOptions o;
        o.n = n;
        o.parallel = false;
        CensusCounts recount;
        enumerate_antichains(n, EnumOrder::Subset, [&](const Hypergraph& h) {
            const OracleProperties p = oracle_properties(h);
            const bool reg = is_regular(h).regular;
            ++recount.combo[(p.proper ? 1 : 0) | (p.strong ? 2 : 0) | (reg ? 4 : 0)];
            ++recount.total;
            return true;
        });
        const CensusCounts counts = run_census(o);
        CHECK(counts.total == recount.total);
        for (int i = 0; i < 8; ++i) CHECK(counts.combo[i] == recount.combo[i]);
    }
}

TEST_CASE("parallel and serial censuses agree") {
    for (int n = 4; n <= 5; ++n) {
        CensusOptions par, ser;
        par.n = ser.n = n;
        par.filter = ser.filter = "regular,decisive";
        ser.parallel = false;
        const CensusCounts a = run_census(par);
        const CensusCounts b = run_census(ser);
        CHECK(a.total == b.total);
        CHECK(a.matching == b.matching);
        for (int i = 0; i < 8; ++i) CHECK(a.combo[i] == b.combo[i]);
    }
}

TEST_CASE("census streams deterministically") {
    auto collect = [] {
        std::vector<std::string> rows;
        CensusOptions o;
        o.n = 3;
        o.filter = "decisive";
        run_census(o, [&](const Hypergraph& h) { rows.push_back(serialize_game_string(h)); });
        return rows;
    };
    const auto first = collect();
    const auto second = collect();
    CHECK(first == second);
    CHECK(first.size() == 4);
}

TEST_CASE("the long-running gate is enforced") {
    CensusOptions o;
    o.n = 7;
    CHECK_THROWS_AS(run_census(o), GroundSetTooLarge);
    o.n = 13;
    o.allow_long_running = true;
    CHECK_THROWS_AS(run_census(o), GroundSetTooLarge);
}

TEST_CASE("checkpointed runs resume without double counting") {
    const std::string path = "/tmp/sgt_census_checkpoint_test";
    CensusOptions full;
    full.n = 4;
    full.parallel = false;
    const CensusCounts expect = run_census(full);

    // replay the first k visits by hand, stash a checkpoint mid-stream
    const int k = 37;
    CensusCounts head;
    std::vector<std::uint64_t> path_masks;
    int seen = 0;
    enumerate_antichains(4, EnumOrder::Subset, [&](const Hypergraph& h) {
        const OracleProperties p = oracle_properties(h);
        const bool reg = is_regular(minimize(h)).regular;
        ++head.total;
        ++head.combo[(p.proper ? 1 : 0) | (p.strong ? 2 : 0) | (reg ? 4 : 0)];
        path_masks.clear();
        for (const Coalition& x : h.edges) path_masks.push_back(x.bits);
        return ++seen < k;
    });
    {
        std::ofstream out(path, std::ios::trunc);
        out << head.total << ' ' << head.matching;
        for (int i = 0; i < 8; ++i) out << ' ' << head.combo[i];
        out << "\n";
        for (std::size_t i = 0; i < path_masks.size(); ++i) out << (i ? " " : "") << path_masks[i];
        out << "\n";
    }
    CensusOptions resume;
    resume.n = 4;
    resume.checkpoint_path = path;
    const CensusCounts got = run_census(resume);
    CHECK(got.total == expect.total);
    for (int i = 0; i < 8; ++i) CHECK(got.combo[i] == expect.combo[i]);
    std::remove(path.c_str());
}

TEST_CASE("shift-order census enumerates economic specifications") {
    // over 2 players: shift-antichains are {}, {00}, {01}, {10}, {11}; the
    // pairs {01,10} etc. are shift-comparable, so exactly 5 nodes
    CensusOptions o;
    o.n = 2;
    o.order = EnumOrder::Shift;
    o.parallel = false;
    const CensusCounts c = run_census(o);
    CHECK(c.total == 5);
    CHECK(c.count_regular() == 5); // expansions are regular by construction
}

TEST_CASE("analyze reports on the named instances") {
    AnalyzeOptions fano_opts;
    fano_opts.emit_dual = true;
    const Report fano = analyze(family("fano"), fano_opts);
    CHECK(fano.proper);
    CHECK(fano.strong);
    CHECK(fano.decisive);
    CHECK_FALSE(fano.regular);
    CHECK_FALSE(fano.linear);
    CHECK_FALSE(fano.weighted);
    REQUIRE(fano.dual.has_value());
    CHECK(fano.dual->same_edge_set(family("fano"))); // self-dual

    AnalyzeOptions opts;
    opts.emit_shift_kernel = true;
    opts.certify = true;
    const Report ex4 = analyze(family("example4"), opts);
    CHECK(ex4.regular);
    CHECK(ex4.decisive);
    CHECK_FALSE(ex4.weighted);
    CHECK_FALSE(ex4.majority);
    REQUIRE(ex4.shift_kernel.has_value());
    CHECK(rows_of(*ex4.shift_kernel) == rows_of(family("example5")));
    REQUIRE(ex4.certificate.has_value());
    CHECK(verify_nonweighted_certificate(family("example4"), *ex4.certificate));
    CHECK(ex4.stats.simple_measure == 126);
    REQUIRE(ex4.stats.regular_measure.has_value());
    CHECK(*ex4.stats.regular_measure == 54);
}

TEST_CASE("analyze in regular mode expands the economic specification") {
    AnalyzeOptions opts;
    opts.mode = AnalyzeOptions::Mode::Regular;
    const Report r = analyze(family("example5"), opts);
    CHECK(r.kernel_edges == 14); // the expansion is the fourteen-row kernel
    CHECK(r.decisive);
    CHECK(r.regular);
    CHECK_FALSE(r.weighted);
    CHECK(r.stats.simple_measure == 126);
    REQUIRE(r.stats.regular_measure.has_value());
    CHECK(*r.stats.regular_measure == 54);

    CHECK_THROWS_AS(analyze(family("example4"), opts), NotAntichain); // not shift-minimal
}

TEST_CASE("analyze rejects non-antichains unless raw") {
    CHECK_THROWS_AS(analyze(family("example1")), NotAntichain);
    AnalyzeOptions opts;
    opts.raw = true;
    const Report r = analyze(family("example1"), opts);
    CHECK(r.kernel_edges == 2);
    CHECK_FALSE(r.proper);
    CHECK(r.strong);
}

TEST_CASE("report verdicts respect the dependency closure") {
    Rng rng(52);
    for (int i = 0; i < 120; ++i) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Hypergraph h = random_antichain(rng, n);
        const Report r = analyze(h);
        CHECK(r.decisive == (r.proper && r.strong));
        if (r.majority) CHECK((r.weighted && r.decisive));
        if (r.submajority) CHECK((r.weighted && r.strong));
        if (r.weighted) CHECK(r.linear);
        if (r.regular) CHECK(r.linear);
        if (r.stats.regular_measure) CHECK(*r.stats.regular_measure <= r.stats.simple_measure);
    }
}

#ifndef _WIN32
TEST_CASE("command line exit codes") {
    if (std::system("./sgt --help > /dev/null 2>&1") != 0) return; // not run from build dir
    std::system("./sgt family fano > /tmp/sgt_cli_fano.game 2>/dev/null");
    CHECK(WEXITSTATUS(std::system("./sgt analyze /tmp/sgt_cli_fano.game --assert decisive "
                                  "> /dev/null 2>&1")) == 0);
    CHECK(WEXITSTATUS(std::system("./sgt analyze /tmp/sgt_cli_fano.game --assert weighted "
                                  "> /dev/null 2>&1")) == 1);
    CHECK(WEXITSTATUS(std::system("./sgt analyze /nonexistent.game > /dev/null 2>&1")) == 2);
    std::system("printf '3\\n0121\\n' > /tmp/sgt_cli_bad.game");
    CHECK(WEXITSTATUS(std::system("./sgt analyze /tmp/sgt_cli_bad.game > /dev/null 2>&1")) == 2);
}
#endif
