#pragma once

// JSON views of diagnostics. Subsets are written as label lists alongside
// their codes so reports stay readable and replayable.

#include <json.hpp>

#include "shadelab/antimatroid.hpp"
#include "shadelab/interval_partition.hpp"
#include "shadelab/morse.hpp"
#include "shadelab/shade_map.hpp"

namespace shadelab {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json subset_json(const GroundSet& ground, Mask code);

json to_json(const ShadeDiagnostics& d, const GroundSet& ground);
json to_json(const ClosureDiagnostics& d, const GroundSet& ground);
json to_json(const PartitionReport& r, const GroundSet& ground);
json to_json(const MatchingReport& r);
json to_json(const HomologyProfile& h);
json to_json(const CertificateResult& c, bool include_matching = false);

}  // namespace shadelab
