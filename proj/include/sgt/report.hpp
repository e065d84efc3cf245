#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "sgt/duality.hpp"
#include "sgt/hypergraph.hpp"
#include "sgt/regular.hpp"
#include "sgt/weighted.hpp"

namespace sgt {

struct AnalyzeOptions {
    enum class Mode { Simple, Regular };
    Mode mode = Mode::Simple;
    bool raw = false; // minimize non-antichain input instead of rejecting it
    bool emit_dual = false;
    bool emit_shift_kernel = false;
    bool certify = false;
    unsigned certificate_bound = 4;
    int oracle_limit = kDefaultOracleLimit;
};

struct Report {
    int n = 0;
    std::size_t kernel_edges = 0;
    bool proper = false, strong = false, decisive = false;
    bool regular = false, linear = false;
    bool weighted = false, homogeneous = false;
    bool majority = false, submajority = false;
    GameStats stats;

    std::optional<PlayerOrdering> order;                             // regular order when linear
    std::optional<ThresholdCriterion> criterion;                     // when weighted
    std::optional<ThresholdCriterion> homogeneous_criterion;         // when homogeneous
    std::optional<std::pair<Coalition, Coalition>> properness_witness; // disjoint winners
    std::optional<Coalition> strongness_witness;                     // loser with losing complement
    std::optional<NonWeightedCertificate> certificate;               // when certify finds one
    std::optional<Hypergraph> dual;
    std::optional<Hypergraph> shift_kernel;

    std::map<std::string, double> timings_ms;
};

Report analyze(const Hypergraph& input, const AnalyzeOptions& opts = {});

void print_report_text(std::ostream& out, const Report& r);
void print_report_kv(std::ostream& out, const Report& r);

// Verdict lookup for --assert; throws on unknown property names.
bool report_property(const Report& r, const std::string& name);

} // namespace sgt
