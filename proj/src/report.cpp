#include "shadelab/report.hpp"

namespace shadelab {

json subset_json(const GroundSet& ground, Mask code) {
  json labels = json::array();
  for (Mask rest = code; rest; rest &= rest - 1) labels.push_back(ground.label(lowest_element(rest)));
  return {{"code", code}, {"elements", labels}};
}

namespace {

json witness_json(const GroundSet& ground, const std::optional<AxiomWitness>& w) {
  if (!w) return nullptr;
  return {{"set", subset_json(ground, w->set)}, {"element", ground.label(w->element)}};
}

json check_json(bool ok, json witness) {
  json out = {{"ok", ok}};
  if (!ok) out["witness"] = std::move(witness);
  return out;
}

}  // namespace

json to_json(const ShadeDiagnostics& d, const GroundSet& ground) {
  return {
      {"shade_map", d.is_shade_map()},
      {"monotonicity", std::string(to_string(d.monotonicity))},
      {"axiom1", check_json(d.axiom1_ok, witness_json(ground, d.axiom1_witness))},
      {"axiom2", check_json(d.axiom2_ok, witness_json(ground, d.axiom2_witness))},
      {"axiom1_weak", check_json(d.axiom1_weak_ok, witness_json(ground, d.axiom1_weak_witness))},
      {"axiom2_weak", check_json(d.axiom2_weak_ok, witness_json(ground, d.axiom2_weak_witness))},
      {"axiom3", check_json(d.axiom3_ok, witness_json(ground, d.axiom3_witness))},
      {"inclusion_preserving", check_json(d.inclusion_preserving(), witness_json(ground, d.preserving_witness))},
      {"inclusion_reversing", check_json(d.inclusion_reversing(), witness_json(ground, d.reversing_witness))},
      {"cross_checks_hold", d.cross_checks_hold()},
  };
}

json to_json(const ClosureDiagnostics& d, const GroundSet& ground) {
  json out = {
      {"quasi_closure", d.is_quasi_closure()},
      {"closure", d.is_closure()},
      {"antimatroidal", d.antimatroidal_ok},
      {"empty_fixed", d.empty_fixed},
      {"extensive", check_json(d.extensive_ok, d.extensive_witness ? subset_json(ground, *d.extensive_witness) : json())},
      {"monotone", check_json(d.monotone_ok, d.monotone_witness
                                                 ? json{{"set", subset_json(ground, d.monotone_witness->first)},
                                                        {"element", ground.label(d.monotone_witness->second)}}
                                                 : json())},
      {"idempotent",
       check_json(d.idempotent_ok, d.idempotent_witness ? subset_json(ground, *d.idempotent_witness) : json())},
  };
  json exchange = nullptr;
  if (d.antimatroidal_witness) {
    exchange = {{"set", subset_json(ground, d.antimatroidal_witness->set)},
                {"y", ground.label(d.antimatroidal_witness->y)},
                {"z", ground.label(d.antimatroidal_witness->z)}};
  }
  out["anti_exchange"] = check_json(d.antimatroidal_ok, exchange);
  return out;
}

json to_json(const PartitionReport& r, const GroundSet& ground) {
  json out = {{"valid", r.valid}, {"member_total", r.member_total}};
  if (r.malformed) out["malformed_block"] = {{"lower", r.malformed->lower}, {"upper", r.malformed->upper}};
  if (r.doubly_covered) out["doubly_covered"] = subset_json(ground, *r.doubly_covered);
  if (r.uncovered) out["uncovered"] = subset_json(ground, *r.uncovered);
  return out;
}

json to_json(const MatchingReport& r) {
  return {{"complete", r.complete()},
          {"involution_failures", r.involution_failures},
          {"covering_failures", r.covering_failures},
          {"fixed_points", r.fixed_points},
          {"alternating_sum", r.alternating_sum}};
}

json to_json(const HomologyProfile& h) {
  return {{"reduced_betti", h.reduced_betti}, {"first_dimension", -1}, {"euler_sum", h.euler_sum}};
}

json to_json(const CertificateResult& c, bool include_matching) {
  json out = {{"status", std::string(to_string(c.status))}, {"method", std::string(c.method)}, {"nodes", c.nodes}};
  if (include_matching && c.matching) {
    json pairs = json::array();
    for (std::size_t i = 0; i < c.matching->size(); ++i) {
      const Mask f = c.matching->family()[i];
      const Mask p = c.matching->partners()[i];
      if (f < p) pairs.push_back({f, p});
    }
    out["pairs"] = std::move(pairs);
  }
  return out;
}

}  // namespace shadelab
