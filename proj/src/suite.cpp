#include "shadelab/suite.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "shadelab/antimatroid.hpp"
#include "shadelab/constructions.hpp"
#include "shadelab/error.hpp"
#include "shadelab/explore.hpp"
#include "shadelab/interval_partition.hpp"
#include "shadelab/io.hpp"
#include "shadelab/report.hpp"

namespace shadelab {

namespace {

constexpr std::pair<Suite, std::string_view> kSuiteNames[] = {
    {Suite::elser, "elser"},
    {Suite::vertex, "vertex"},
    {Suite::shade_axioms, "shade-axioms"},
    {Suite::cryptomorphism_antimatroid, "cryptomorphism-antimatroid"},
    {Suite::cryptomorphism_bip, "cryptomorphism-bip"},
    {Suite::morse, "morse"},
    {Suite::explore, "explore"},
};

}  // namespace

std::string_view to_string(Suite s) {
  for (auto [suite, name] : kSuiteNames) {
    if (suite == s) return name;
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (auto [suite, n] : kSuiteNames) {
    if (n == name) return suite;
  }
  throw UsageError("unknown suite '" + std::string(name) + "'");
}

namespace {

struct CheckLog {
  std::string name;
  std::uint64_t cases = 0;
  bool ok = true;
  json witness;
};

class Ledger {
 public:
  Ledger(Suite suite, std::uint64_t seed) : suite_(suite), seed_(seed) {}

  void record(const std::string& name, bool ok, const std::function<json()>& witness) {
    auto [it, fresh] = index_.emplace(name, checks_.size());
    if (fresh) checks_.push_back({name, 0, true, nullptr});
    auto& c = checks_[it->second];
    ++c.cases;
    if (!ok && c.ok) {
      c.ok = false;
      c.witness = witness();
      c.witness["suite"] = std::string(to_string(suite_));
      c.witness["check"] = name;
      c.witness["seed"] = seed_;
    }
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckLog& c) { return c.ok; });
  }
  bool empty() const { return checks_.empty(); }

  json checks_json() const {
    json out = json::array();
    for (const auto& c : checks_) {
      json entry = {{"name", c.name}, {"cases", c.cases}, {"ok", c.ok}};
      if (!c.ok) entry["witness"] = c.witness;
      out.push_back(std::move(entry));
    }
    return out;
  }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  Suite suite_;
  std::uint64_t seed_;
  std::vector<CheckLog> checks_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> notes_;
};

Multigraph with_source(Multigraph g, int v) {
  g.set_source(v);
  return g;
}

// Witness carrying the graph with v as its source.
std::function<json()> graph_witness(const Multigraph& g, int v, json extra = json::object()) {
  return [&g, v, extra]() {
    json w = extra;
    w["instance"] = graph_to_json(with_source(g, v));
    return w;
  };
}

std::function<json()> table_witness(const SubsetMap& m, json extra = json::object()) {
  return [&m, extra]() {
    json w = extra;
    w["table"] = table_to_json(m);
    return w;
  };
}

std::vector<int> sources_of(const Multigraph& g, bool single_graph) {
  if (single_graph && g.source()) return {*g.source()};
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) out.push_back(v);
  return out;
}

struct Context {
  const VerificationRun& run;
  Ledger& ledger;
  bool single_graph;
  std::uint64_t skipped_instances = 0;
};

void check_elser(Context& ctx, const Multigraph& g, std::size_t index) {
  if (g.edge_count() == 0) {
    ++ctx.skipped_instances;
    return;
  }
  for (int v : sources_of(g, ctx.single_graph)) {
    const auto m = edge_shade_map(g, v);
    std::int64_t pandemic = 0;
    for (Mask f = 0; f < m.table().size(); ++f) {
      if (m(f) == m.full()) pandemic += sign_of(f);
    }
    ctx.ledger.record("pandemic_sum_zero", pandemic == 0, graph_witness(g, v, {{"sum", pandemic}}));
    for (Mask target : target_stream(g.edge_count(), ctx.run.stream.seed, index, v)) {
      const auto sums = shade_alternating_sums(m, target);
      const json extra = {{"target", target}, {"contained", sums.contained}, {"not_contained", sums.not_contained}};
      ctx.ledger.record("contained_sum_zero", sums.contained == 0, graph_witness(g, v, extra));
      ctx.ledger.record("not_contained_sum_zero", sums.not_contained == 0, graph_witness(g, v, extra));
    }
  }
}

void check_vertex(Context& ctx, const Multigraph& g, std::size_t) {
  if (g.has_directed_edges() || g.vertex_count() < 2) {
    ++ctx.skipped_instances;
    return;
  }
  for (int v : sources_of(g, ctx.single_graph)) {
    const auto fam = vertex_pandemic_family(g, v);
    ctx.ledger.record("vertex_pandemic_sum_zero", fam.alternating_sum == 0,
                      graph_witness(g, v, {{"sum", fam.alternating_sum}}));
    const auto d = classify_map(vertex_shade_map(g, v));
    ctx.ledger.record("vertex_shade_is_shade_map", d.is_shade_map(),
                      graph_witness(g, v, {{"diagnostics", to_json(d, vertex_ground(g, v))}}));
    ctx.ledger.record("vertex_shade_inclusion_preserving", d.inclusion_preserving(),
                      graph_witness(g, v, {{"diagnostics", to_json(d, vertex_ground(g, v))}}));
  }
}

// Shade(A ∪ B) = Shade A = Shade(A \ B) whenever B misses Shade A.
bool union_and_difference_lemmas(const SubsetMap& m, json& witness) {
  const Mask full = m.full();
  for (Mask a = 0; a < m.table().size(); ++a) {
    const Mask shade = m(a);
    bool ok = true;
    for_each_submask_ascending(full & ~shade, [&](Mask b) {
      if (!ok) return;
      if (m(a | b) != shade || m(a & ~b) != shade) {
        ok = false;
        witness = {{"a", a}, {"b", b}};
      }
    });
    if (!ok) return false;
  }
  return true;
}

void check_shade_axioms(Context& ctx, const Multigraph& g, std::size_t) {
  for (int v : sources_of(g, ctx.single_graph)) {
    const auto m = edge_shade_map(g, v);
    const auto d = classify_map(m);
    const auto ground = g.edge_ground();
    ctx.ledger.record("edge_shade_is_shade_map", d.is_shade_map(),
                      graph_witness(g, v, {{"diagnostics", to_json(d, ground)}}));
    ctx.ledger.record("edge_shade_inclusion_preserving", d.inclusion_preserving(),
                      graph_witness(g, v, {{"diagnostics", to_json(d, ground)}}));
    ctx.ledger.record("cross_checks_hold", d.cross_checks_hold(), graph_witness(g, v));
    const auto dd = classify_map(dual_map(m));
    ctx.ledger.record("dual_is_reversing_shade_map", dd.is_shade_map() && dd.inclusion_reversing(),
                      graph_witness(g, v, {{"diagnostics", to_json(dd, ground)}}));
    ctx.ledger.record("dual_involution", dual_map(dual_map(m)) == m, graph_witness(g, v));
    if (g.edge_count() <= 10) {
      json w;
      const bool ok = union_and_difference_lemmas(m, w);
      ctx.ledger.record("union_difference_lemmas", ok, graph_witness(g, v, w));
    }
    if (!g.has_directed_edges() && g.vertex_count() >= 2) {
      const auto vd = classify_map(vertex_shade_map(g, v));
      ctx.ledger.record("vertex_shade_is_shade_map", vd.is_shade_map(), graph_witness(g, v));
      ctx.ledger.record("vertex_shade_inclusion_preserving", vd.inclusion_preserving(), graph_witness(g, v));
      ctx.ledger.record("cross_checks_hold", vd.cross_checks_hold(), graph_witness(g, v));
    }
  }
}

void check_morse(Context& ctx, const Multigraph& g, std::size_t index) {
  if (g.edge_count() > 12) {
    ++ctx.skipped_instances;
    return;
  }
  for (int v : sources_of(g, ctx.single_graph)) {
    const auto m = edge_shade_map(g, v);
    for (Mask target : target_stream(g.edge_count(), ctx.run.stream.seed, index, v)) {
      const auto complex = build_noninfecting_complex(m, target);
      const json extra = {{"target", target}};
      if (complex.is_void()) continue;
      const auto d = build_elser_matching(m, target);
      const auto report = verify_complete_matching(d.pairs);
      ctx.ledger.record("elser_matching_complete", report.complete(),
                        graph_witness(g, v, {{"target", target}, {"matching", to_json(report)}}));
      if (!report.complete()) continue;
      const auto verdict = verify_acyclic(d);
      ctx.ledger.record("elser_matching_acyclic", verdict.acyclic,
                        graph_witness(g, v, {{"target", target}, {"cycle", verdict.cycle}}));
      bool respects = true;
      for (std::size_t i = 0; i < d.pairs.size() && respects; ++i) {
        const Mask f = d.pairs.family()[i];
        const Mask p = d.pairs.partners()[i];
        respects = m(p) == m(f) && elser_element(m, target, p) == elser_element(m, target, f);
      }
      ctx.ledger.record("elser_matching_respects_shades", respects, graph_witness(g, v, extra));
      const auto h = gf2_reduced_homology(complex);
      const auto sums = shade_alternating_sums(m, target);
      ctx.ledger.record("euler_sum_zero", h.euler_sum == 0, graph_witness(g, v, extra));
      ctx.ledger.record("euler_sum_matches_alternating_sum", h.euler_sum == sums.not_contained,
                        graph_witness(g, v, extra));
      ctx.ledger.record("collapsible_has_zero_homology", h.all_zero(),
                        graph_witness(g, v, {{"target", target}, {"homology", to_json(h)}}));
    }
  }
}

void check_explore(Context& ctx, const Multigraph& g, std::size_t) {
  if (g.edge_count() > 10) {
    ++ctx.skipped_instances;
    return;
  }
  std::vector<int> sources;
  if (ctx.single_graph && g.source()) {
    sources = {*g.source()};
  } else {
    sources = {0};
    if (g.vertex_count() > 1) sources.push_back(g.vertex_count() - 1);
  }
  const Mask target = g.edge_ground().full();
  ExploreOptions options;
  options.search_budget = ctx.run.search_budget;
  const auto report = explore_open_questions(g, sources, target, options);
  const auto problems = validate_explore_report(report);
  ctx.ledger.record("report_schema_valid", problems.empty(),
                    graph_witness(g, sources.front(), {{"problems", problems}}));
  std::vector<SimplicialComplex> built;
  for (int v : sources) built.push_back(build_noninfecting_complex(edge_shade_map(g, v), target));
  built.push_back(multi_source_complex(g, sources, target));
  for (const auto& c : built) {
    ctx.ledger.record("dual_involution", alexander_dual(alexander_dual(c)) == c, graph_witness(g, sources.front()));
  }
}

void check_antimatroid_graph(Context& ctx, const Multigraph& g, std::size_t) {
  if (g.edge_count() > 10 || g.has_directed_edges()) {
    ++ctx.skipped_instances;
    return;
  }
  for (int v : sources_of(g, ctx.single_graph)) {
    const auto tau = linesearch_map(g, v);
    const auto d = classify_closure(tau);
    ctx.ledger.record("linesearch_antimatroidal_quasi_closure", d.is_antimatroidal_quasi_closure(),
                      graph_witness(g, v, {{"diagnostics", to_json(d, g.edge_ground())}}));
    if (g.is_connected()) {
      ctx.ledger.record("linesearch_closure_when_connected", d.is_closure(), graph_witness(g, v));
    }
    ctx.ledger.record("linesearch_matches_dual_shade",
                      closure_from_shade_unchecked(dual_map(edge_shade_map(g, v))) == tau, graph_witness(g, v));
    if (d.is_antimatroidal_quasi_closure()) {
      const auto shade = shade_from_closure(tau);
      ctx.ledger.record("closure_roundtrip", closure_from_shade(shade) == tau, graph_witness(g, v));
      const auto split = split_quasi_closure(tau);
      ctx.ledger.record("split_restricted_is_closure", classify_closure(split.restricted).is_closure(),
                        graph_witness(g, v));
      ctx.ledger.record("split_rejoin_roundtrip", rejoin(split) == tau, graph_witness(g, v));
    }
  }
}

void check_antimatroid_exhaustive(Context& ctx) {
  for (int n = 0; n <= 3; ++n) {
    std::uint64_t antimatroidal = 0;
    for (const auto& tau : all_quasi_closure_operators(n)) {
      const auto d = classify_closure(tau);
      const auto shade = shade_from_closure_unchecked(tau);
      ctx.ledger.record("recover_tau_all_quasi_closures", closure_from_shade_unchecked(shade) == tau,
                        table_witness(tau));
      bool adds = true;
      for (Mask x = 0; x < tau.table().size() && adds; ++x) {
        for (int z = 0; z < n; ++z) {
          if ((tau(x) & bit(z)) && tau(x | bit(z)) != tau(x)) adds = false;
        }
      }
      ctx.ledger.record("closure_absorbs_members", adds, table_witness(tau));
      const auto split = split_quasi_closure(tau);
      ctx.ledger.record("split_restricted_is_closure", classify_closure(split.restricted).is_closure(),
                        table_witness(tau));
      ctx.ledger.record("split_rejoin_roundtrip", rejoin(split) == tau, table_witness(tau));
      if (!d.antimatroidal_ok) continue;
      ++antimatroidal;
      const auto sd = classify_map(shade);
      ctx.ledger.record("shade_from_closure_is_reversing_shade_map", sd.is_shade_map() && sd.inclusion_reversing(),
                        table_witness(tau));
      ctx.ledger.record("closure_roundtrip", closure_from_shade(shade_from_closure(tau)) == tau, table_witness(tau));
    }
    // The other direction runs over every inclusion-reversing shade map,
    // reached through the interval partitions.
    std::uint64_t reversing = 0;
    enumerate_partitions(n, [&](const IntervalPartition& p) {
      const auto shade = shade_from_partition(p);
      const auto sd = classify_map(shade);
      if (!sd.inclusion_reversing()) return;
      ++reversing;
      const auto tau = closure_from_shade(shade);
      ctx.ledger.record("closure_from_shade_is_antimatroidal", classify_closure(tau).is_antimatroidal_quasi_closure(),
                        table_witness(shade));
      ctx.ledger.record("shade_roundtrip", shade_from_closure(tau) == shade, table_witness(shade));
    });
    ctx.ledger.record("bijection_counts_agree", antimatroidal == reversing, [n, antimatroidal, reversing] {
      return json{{"n", n}, {"antimatroidal", antimatroidal}, {"inclusion_reversing", reversing}};
    });
  }
  for (int n = 0; n <= 5; ++n) {
    for (const auto& p : all_posets(n)) {
      const auto down = poset_downset_closure(p);
      ctx.ledger.record("poset_shade_agreement", shade_from_closure(down) == poset_lower_shade(p), table_witness(down));
      ctx.ledger.record("poset_downset_antimatroidal_closure", classify_closure(down).is_closure() &&
                                                                   classify_closure(down).antimatroidal_ok,
                        table_witness(down));
      const auto interval = poset_interval_closure(p);
      const auto di = classify_closure(interval);
      ctx.ledger.record("poset_interval_antimatroidal_closure", di.is_closure() && di.antimatroidal_ok,
                        table_witness(interval));
    }
  }
  for (const auto& pts : point_set_corpus(ctx.run.stream.seed, 40, 6, 3)) {
    const auto hull = convex_closure(pts);
    const auto dh = classify_closure(hull);
    ctx.ledger.record("convex_antimatroidal_closure", dh.is_closure() && dh.antimatroidal_ok, table_witness(hull));
    ctx.ledger.record("convex_shade_agreement", shade_from_closure(hull) == convex_shade(pts), table_witness(hull));
  }
}

// F, G in one block ⇒ the same block, for every G in F's block.
bool blocks_are_consistent(const SubsetMap& m) {
  const Mask full = m.full();
  for (Mask f = 0; f < m.table().size(); ++f) {
    const Mask lower = f & m(f);
    const Mask upper = f | (full & ~m(f));
    bool ok = true;
    for_each_submask_ascending(upper & ~lower, [&](Mask s) {
      const Mask g = lower | s;
      if ((g & m(g)) != lower || (g | (full & ~m(g))) != upper) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

void check_bip_map(Context& ctx, const SubsetMap& m, const std::function<json()>& witness) {
  const auto p = partition_from_shade(m);
  ctx.ledger.record("partition_valid", validate_partition(p).valid, witness);
  ctx.ledger.record("shade_partition_roundtrip", shade_from_partition(p, m.ground()) == m, witness);
  if (m.element_count() <= 10) ctx.ledger.record("blocks_consistent", blocks_are_consistent(m), witness);
}

void check_bip_graph(Context& ctx, const Multigraph& g, std::size_t) {
  if (g.edge_count() > 10) {
    ++ctx.skipped_instances;
    return;
  }
  for (int v : sources_of(g, ctx.single_graph)) {
    const auto m = edge_shade_map(g, v);
    check_bip_map(ctx, m, graph_witness(g, v));
    check_bip_map(ctx, dual_map(m), graph_witness(g, v, {{"dual", true}}));
    if (!g.has_directed_edges() && g.vertex_count() >= 2) {
      check_bip_map(ctx, vertex_shade_map(g, v), graph_witness(g, v, {{"vertex_mode", true}}));
    }
  }
}

void check_bip_exhaustive(Context& ctx) {
  for (int n = 0; n <= 3; ++n) {
    enumerate_partitions(n, [&](const IntervalPartition& p) {
      const auto shade = shade_from_partition(p);
      const auto witness = [&p] { return json{{"partition", partition_to_json(p)}}; };
      const auto d = classify_map(shade);
      ctx.ledger.record("partition_gives_shade_map", d.is_shade_map(), witness);
      ctx.ledger.record("partition_shade_roundtrip", partition_from_shade(shade) == p, witness);
    });
  }
  for (int n = 0; n <= 4; ++n) {
    for (const auto& p : all_posets(n)) {
      const auto m = poset_lower_shade(p);
      check_bip_map(ctx, m, table_witness(m));
    }
  }
}

}  // namespace

SuiteOutcome run_suite(const VerificationRun& run) {
  const auto start = std::chrono::steady_clock::now();
  Ledger ledger(run.suite, run.stream.seed);
  Context ctx{run, ledger, run.graph.has_value()};

  std::vector<Multigraph> graphs;
  if (run.graph) {
    graphs.push_back(*run.graph);
  } else {
    graphs = graph_stream(run.stream);
  }

  std::function<void(Context&, const Multigraph&, std::size_t)> per_graph;
  switch (run.suite) {
    case Suite::elser: per_graph = check_elser; break;
    case Suite::vertex: per_graph = check_vertex; break;
    case Suite::shade_axioms: per_graph = check_shade_axioms; break;
    case Suite::cryptomorphism_antimatroid:
      per_graph = check_antimatroid_graph;
      if (!run.graph) check_antimatroid_exhaustive(ctx);
      break;
    case Suite::cryptomorphism_bip:
      per_graph = check_bip_graph;
      if (!run.graph) check_bip_exhaustive(ctx);
      break;
    case Suite::morse: per_graph = check_morse; break;
    case Suite::explore: per_graph = check_explore; break;
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) per_graph(ctx, graphs[i], i);

  SuiteOutcome out;
  if (ctx.skipped_instances > 0) {
    std::string why;
    switch (run.suite) {
      case Suite::elser: why = "hypothesis E != {} fails"; break;
      case Suite::vertex: why = "graph has directed edges or no vertex besides the source"; break;
      default: why = "instance exceeds the suite's edge cap or uses directed edges"; break;
    }
    ledger.note(std::to_string(ctx.skipped_instances) + " instance(s) skipped: " + why);
  }
  out.skipped = ledger.empty();
  out.passed = ledger.passed();
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.report = {{"schema", kSchemaVersion},
                {"kind", "suite"},
                {"suite", std::string(to_string(run.suite))},
                {"status", out.skipped ? "skipped" : (out.passed ? "pass" : "fail")},
                {"checks", ledger.checks_json()},
                {"notes", ledger.notes()},
                {"timing_ms", elapsed}};
  if (run.graph) {
    out.report["instance"] = graph_to_json(*run.graph);
  } else {
    out.report["stream"] = {{"seed", run.stream.seed},
                            {"instances", run.stream.instances},
                            {"vertices", {run.stream.min_vertices, run.stream.max_vertices}},
                            {"edges", {run.stream.min_edges, run.stream.max_edges}},
                            {"directed_share", run.stream.directed_share}};
  }
  return out;
}

SuiteOutcome replay_witness(const json& given) {
  // A whole report replays its first failing check.
  if (given.is_object() && given.contains("checks")) {
    for (const auto& c : given.at("checks")) {
      if (c.contains("witness") && !c.at("witness").is_null()) return replay_witness(c.at("witness"));
    }
    throw UsageError("report has no failure witness to replay");
  }
  const json& witness = given;
  if (!witness.is_object() || !witness.contains("suite")) throw UsageError("witness has no 'suite' field");
  VerificationRun run;
  run.suite = parse_suite(witness.at("suite").get<std::string>());
  if (witness.contains("instance")) {
    run.graph = graph_from_json(witness.at("instance"));
  } else if (witness.contains("seed")) {
    run.stream.seed = witness.at("seed").get<std::uint64_t>();
  }
  return run_suite(run);
}

json strip_timing(json report) {
  report.erase("timing_ms");
  return report;
}

}  // namespace shadelab
