#pragma once

// Exhaustive verification driver. A run checks one family of theorems on a
// seeded instance stream (or on one graph) and produces a JSON report with
// one entry per check, the number of cases it covered and the first witness
// of failure.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "shadelab/corpus.hpp"
#include "shadelab/graph.hpp"
#include "shadelab/morse.hpp"

namespace shadelab {

enum class Suite { elser, vertex, shade_axioms, cryptomorphism_antimatroid, cryptomorphism_bip, morse, explore };

std::string_view to_string(Suite s);
/// UsageError for unknown names.
Suite parse_suite(std::string_view name);

struct VerificationRun {
  Suite suite = Suite::elser;
  GraphStreamSpec stream;
  /// When set, the suite runs on this graph (all sources) instead of the stream.
  std::optional<Multigraph> graph;
  std::uint64_t search_budget = kDefaultSearchBudget;
};

struct SuiteOutcome {
  bool passed = true;
  bool skipped = false;
  nlohmann::json report;  // includes a "timing_ms" field excluded from comparisons
};

SuiteOutcome run_suite(const VerificationRun& run);

/// Re-runs the suite named in a failure witness on the instance it carries.
SuiteOutcome replay_witness(const nlohmann::json& witness);

/// The report without its timing field, for determinism comparisons.
nlohmann::json strip_timing(nlohmann::json report);

}  // namespace shadelab
