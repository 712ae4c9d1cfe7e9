#include "shadelab/explore.hpp"

#include "shadelab/error.hpp"
#include "shadelab/report.hpp"

namespace shadelab {

namespace {

constexpr const char* kConvention =
    "augmented chain complex, empty face in dimension -1; the void complex has all reduced Betti numbers 0";

json complex_entry(const std::string& name, const SimplicialComplex& c, const CertificateResult& cert) {
  const auto h = gf2_reduced_homology(c);
  return {{"name", name},
          {"faces", c.face_count()},
          {"void", c.is_void()},
          {"euler_sum", h.euler_sum},
          {"homology", to_json(h)},
          {"collapsibility", to_json(cert)}};
}

json searched_entry(const std::string& name, const SimplicialComplex& c, const ExploreOptions& options) {
  return complex_entry(name, c, search_collapsibility(c, options.search_budget));
}

}  // namespace

json explore_open_questions(const Multigraph& g, const std::vector<int>& sources, Mask target,
                            const ExploreOptions& options) {
  const int e = g.edge_count();
  if (e > 14) throw UsageError("exploration is limited to 14 edges");
  if (sources.empty()) throw UsageError("the source set U must be nonempty");
  const GroundSet ground = g.edge_ground();
  if (!is_subset(target, ground.full())) throw UsageError("target set is not a subset of the edges");

  json complexes = json::array();
  for (int v : sources) {
    const auto m = edge_shade_map(g, v);
    const auto a = build_noninfecting_complex(m, target);
    const std::string tag = g.vertex_name(v);
    CertificateResult cert;
    if (a.is_void()) {
      cert = search_collapsibility(a, options.search_budget);
    } else {
      cert = elser_certificate(m, target);
    }
    complexes.push_back(complex_entry("A[" + tag + "]", a, cert));
    complexes.push_back(searched_entry("dual(A[" + tag + "])", alexander_dual(a), options));
  }
  const auto a_u = multi_source_complex(g, sources, target);
  complexes.push_back(searched_entry("A_U", a_u, options));
  complexes.push_back(searched_entry("dual(A_U)", alexander_dual(a_u), options));

  const auto h_u = gf2_reduced_homology(a_u);
  const auto degrees = h_u.nonzero_dimensions();
  json multi = {{"homology_concentrated", degrees.size() <= 1},
                {"nonzero_degrees", degrees}};
  if (degrees.size() <= 1) {
    const int attempts = options.greedy_attempts > 0 ? options.greedy_attempts : std::max(1, e);
    const auto greedy = greedy_morse_matching(a_u, attempts);
    json census = json::array();
    for (std::size_t k = 0; k < greedy.critical_by_dimension.size(); ++k) {
      if (greedy.critical_by_dimension[k] != 0) {
        census.push_back({{"dimension", static_cast<int>(k) - 1}, {"count", greedy.critical_by_dimension[k]}});
      }
    }
    multi["greedy_morse"] = {{"heuristic", true},
                             {"attempts", greedy.attempts},
                             {"pairs", greedy.pairs.size()},
                             {"critical_total", greedy.critical_total},
                             {"critical_by_dimension", census},
                             {"single_degree", greedy.single_degree}};
  }

  json source_names = json::array();
  for (int v : sources) source_names.push_back(g.vertex_name(v));
  return {{"schema", kSchemaVersion},
          {"kind", "explore"},
          {"convention", kConvention},
          {"coefficient_field", "GF(2)"},
          {"asserted", false},
          {"edges", e},
          {"sources", source_names},
          {"target", subset_json(ground, target)},
          {"complexes", complexes},
          {"multi_source", multi}};
}

std::vector<std::string> validate_explore_report(const json& r) {
  std::vector<std::string> problems;
  auto require = [&](const json& obj, const char* key, auto pred, const char* what) {
    if (!obj.is_object() || !obj.contains(key) || !pred(obj.at(key))) {
      problems.push_back(std::string("field '") + key + "' missing or not " + what);
      return false;
    }
    return true;
  };
  auto is_int = [](const json& v) { return v.is_number_integer(); };
  auto is_str = [](const json& v) { return v.is_string(); };
  auto is_bool = [](const json& v) { return v.is_boolean(); };
  auto is_arr = [](const json& v) { return v.is_array(); };
  auto is_obj = [](const json& v) { return v.is_object(); };

  if (require(r, "schema", is_int, "an integer") && r.at("schema") != kSchemaVersion) {
    problems.push_back("unsupported schema version");
  }
  require(r, "convention", is_str, "a string");
  if (require(r, "coefficient_field", is_str, "a string") && r.at("coefficient_field") != "GF(2)") {
    problems.push_back("coefficient field must be GF(2)");
  }
  require(r, "sources", is_arr, "an array");
  if (require(r, "complexes", is_arr, "an array")) {
    if (r.at("complexes").size() < 4) problems.push_back("fewer than four complexes reported");
    for (const auto& c : r.at("complexes")) {
      require(c, "name", is_str, "a string");
      require(c, "faces", is_int, "an integer");
      require(c, "euler_sum", is_int, "an integer");
      if (require(c, "homology", is_obj, "an object")) {
        const auto& h = c.at("homology");
        if (require(h, "reduced_betti", is_arr, "an array")) {
          std::int64_t alt = 0;
          int sign = 1;
          for (const auto& b : h.at("reduced_betti")) {
            if (!b.is_number_integer() || b.get<std::int64_t>() < 0) problems.push_back("negative Betti number");
            alt += sign * b.get<std::int64_t>();
            sign = -sign;
          }
          if (c.contains("euler_sum") && c.at("euler_sum").is_number_integer() && alt != c.at("euler_sum")) {
            problems.push_back("Betti numbers disagree with the Euler sum of " + c.value("name", std::string("?")));
          }
        }
      }
      if (require(c, "collapsibility", is_obj, "an object")) {
        const auto& s = c.at("collapsibility");
        if (require(s, "status", is_str, "a string")) {
          const auto st = s.at("status").get<std::string>();
          if (st != "found" && st != "none_exists" && st != "unknown") problems.push_back("bad status " + st);
        }
      }
    }
  }
  if (require(r, "multi_source", is_obj, "an object")) {
    const auto& m = r.at("multi_source");
    if (require(m, "homology_concentrated", is_bool, "a boolean") && m.at("homology_concentrated").get<bool>()) {
      if (require(m, "greedy_morse", is_obj, "an object")) {
        const auto& g = m.at("greedy_morse");
        require(g, "heuristic", is_bool, "a boolean");
        require(g, "critical_by_dimension", is_arr, "an array");
        require(g, "critical_total", is_int, "an integer");
      }
    }
  }
  return problems;
}

}  // namespace shadelab
