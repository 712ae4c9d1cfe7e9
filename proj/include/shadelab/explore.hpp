#pragma once

// Evidence gathering for the dual and multi-source complexes. Nothing here is
// asserted; the report records homology, Euler sums and collapsibility
// status for later study.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "shadelab/graph.hpp"
#include "shadelab/morse.hpp"

namespace shadelab {

struct ExploreOptions {
  std::uint64_t search_budget = kDefaultSearchBudget;
  int greedy_attempts = 0;  // 0 means one attempt per ground-set element
};

/// Computes A for each source, its dual, A_U and the dual of A_U. Requires
/// |E| ≤ 14 and a nonempty source list.
nlohmann::json explore_open_questions(const Multigraph& g, const std::vector<int>& sources, Mask target,
                                      const ExploreOptions& options = {});

/// Structural problems with a report; empty when it conforms.
std::vector<std::string> validate_explore_report(const nlohmann::json& report);

}  // namespace shadelab
