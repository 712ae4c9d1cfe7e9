#pragma once

// Text formats for graphs, posets and point sets, and JSON forms of tables,
// partitions, complexes and matchings.

#include <string>
#include <string_view>

#include <json.hpp>

#include "shadelab/feasibility.hpp"
#include "shadelab/graph.hpp"
#include "shadelab/interval_partition.hpp"
#include "shadelab/morse.hpp"
#include "shadelab/poset.hpp"

namespace shadelab {

/// Whole file as a string; UsageError if it cannot be opened.
std::string read_text_file(const std::string& path);
nlohmann::json read_json_file(const std::string& path);

/// Lines `vertex <name>`, `edge <name> <u> <v>`, `arc <name> <u> <v>`,
/// `source <name>`; `#` starts a comment. Edge ids follow line order,
/// vertices are created on first use.
Multigraph parse_graph(std::string_view text);

/// {"vertices": [names], "edges": [{"name", "a", "b", "directed"}], "source": name}
nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);

/// Lines `element <name>` and `rel <a> <b>` (a < b).
Poset parse_poset(std::string_view text);

/// Lines `point <name> <c1> <c2> ...` with integer or `num/den` coordinates.
RationalPointSet parse_points(std::string_view text);
Rational parse_rational(std::string_view text);

/// A bare array of 2^n codes, or {"ground": n | [labels], "table": [...]}.
SubsetMap table_from_json(const nlohmann::json& j);
nlohmann::json table_to_json(const SubsetMap& m);

/// A bare array of {lower, upper}, or {"elements": n, "blocks": [...]}. For a
/// bare array n is the bit length of the largest upper code.
IntervalPartition partition_from_json(const nlohmann::json& j);
nlohmann::json partition_to_json(const IntervalPartition& p);

/// {"ground": n | [labels], "faces": [codes]}
SimplicialComplex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const SimplicialComplex& c);

/// {"pairs": [[a, b], ...]} over the faces of `c`.
MatchingTable matching_from_json(const nlohmann::json& j, const SimplicialComplex& c);

}  // namespace shadelab
