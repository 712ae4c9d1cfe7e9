// shade-lab: command-line front end for the shadelab library.
//
// Exit codes: 0 pass, 1 a theorem check failed, 2 usage / size / precondition
// error, 3 internal invariant breach.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shadelab/antimatroid.hpp"
#include "shadelab/constructions.hpp"
#include "shadelab/error.hpp"
#include "shadelab/explore.hpp"
#include "shadelab/graph.hpp"
#include "shadelab/interval_partition.hpp"
#include "shadelab/io.hpp"
#include "shadelab/morse.hpp"
#include "shadelab/report.hpp"
#include "shadelab/suite.hpp"

using namespace shadelab;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Globals {
  bool json_output = false;
  std::uint64_t seed = 42;
  int max_edges = 12;
  std::string replay;
};

// Inputs shared by several commands; at most one map source is used.
struct Inputs {
  std::string graph;
  std::string poset;
  std::string points;
  std::string table;
  std::string complex;
  std::string source;
  std::string endpoint_rule = "endpoints";
  bool vertex_mode = false;
  bool dual = false;
};

Multigraph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

int pick_source(const Multigraph& g, const std::string& name) {
  if (name.empty()) return g.require_source();
  auto v = g.vertex_index(name);
  if (!v) throw UsageError("unknown vertex '" + name + "'");
  return *v;
}

std::vector<int> pick_sources(const Multigraph& g, const std::string& list) {
  if (list.empty()) return {g.require_source()};
  std::vector<int> out;
  std::stringstream in(list);
  for (std::string name; std::getline(in, name, ',');) out.push_back(pick_source(g, name));
  return out;
}

void emit(const Globals& globals, const json& report, const std::string& text) {
  if (globals.json_output) {
    json out = report;
    if (!out.contains("schema")) out["schema"] = kSchemaVersion;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string format_family(const GroundSet& ground, const std::vector<Mask>& family) {
  std::string out;
  for (Mask f : family) out += "  " + ground.format(f) + "\n";
  return out;
}

// The shade map described by the inputs.
SubsetMap load_shade_map(const Inputs& in, bool* reversing_hint = nullptr) {
  SubsetMap m;
  if (!in.graph.empty()) {
    const auto g = load_graph(in.graph);
    const int v = pick_source(g, in.source);
    m = in.vertex_mode ? vertex_shade_map(g, v) : edge_shade_map(g, v, parse_endpoint_rule(in.endpoint_rule));
  } else if (!in.poset.empty()) {
    m = poset_lower_shade(parse_poset(read_text_file(in.poset)));
    if (reversing_hint) *reversing_hint = true;
  } else if (!in.points.empty()) {
    m = convex_shade(parse_points(read_text_file(in.points)));
  } else if (!in.table.empty()) {
    m = table_from_json(read_json_file(in.table));
  } else {
    throw UsageError("give one of --graph, --poset, --points or --table");
  }
  return in.dual ? dual_map(m) : m;
}

std::string diagnostics_text(const ShadeDiagnostics& d) {
  std::ostringstream out;
  out << "shade map: " << (d.is_shade_map() ? "yes" : "no") << "\n"
      << "axiom 1: " << d.axiom1_ok << "  axiom 2: " << d.axiom2_ok << "  axiom 1': " << d.axiom1_weak_ok
      << "  axiom 2': " << d.axiom2_weak_ok << "  axiom 3: " << d.axiom3_ok << "\n"
      << "monotonicity: " << to_string(d.monotonicity) << "\n";
  return out.str();
}

std::string closure_text(const ClosureDiagnostics& d) {
  std::ostringstream out;
  out << "extensive: " << d.extensive_ok << "  monotone: " << d.monotone_ok << "  idempotent: " << d.idempotent_ok
      << "  anti-exchange: " << d.antimatroidal_ok << "\n"
      << "quasi-closure: " << (d.is_quasi_closure() ? "yes" : "no") << "  closure: " << (d.is_closure() ? "yes" : "no")
      << "\n";
  return out.str();
}

int cmd_infect(const Globals& globals, const Inputs& in, const std::string& set_text) {
  const auto g = load_graph(in.graph);
  const int v = pick_source(g, in.source);
  if (in.vertex_mode) {
    const auto ground = vertex_ground(g, v);
    const Mask f = ground.parse(set_text).code();
    const Mask shade = shade_vertices(g, v, f);
    emit(globals, {{"kind", "infect"}, {"mode", "vertex"}, {"set", subset_json(ground, f)},
                   {"shade", subset_json(ground, shade)}, {"pandemic", shade == ground.full()}},
         "Shade " + ground.format(f) + " = " + ground.format(shade) + "\n");
    return kExitPass;
  }
  const auto ground = g.edge_ground();
  const Mask f = ground.parse(set_text).code();
  const Mask shade = shade_edges(g, v, f, parse_endpoint_rule(in.endpoint_rule));
  emit(globals,
       {{"kind", "infect"}, {"mode", "edge"}, {"set", subset_json(ground, f)}, {"shade", subset_json(ground, shade)},
        {"pandemic", shade == ground.full()}},
       "Shade " + ground.format(f) + " = " + ground.format(shade) + (shade == ground.full() ? "  (pandemic)" : "") +
           "\n");
  return kExitPass;
}

int cmd_pandemic(const Globals& globals, const Inputs& in) {
  const auto g = load_graph(in.graph);
  const int v = pick_source(g, in.source);
  const auto fam = in.vertex_mode ? vertex_pandemic_family(g, v)
                                  : pandemic_family(g, v, parse_endpoint_rule(in.endpoint_rule));
  json members = json::array();
  for (Mask f : fam.members) members.push_back(subset_json(fam.ground, f));
  emit(globals,
       {{"kind", "pandemic"}, {"mode", in.vertex_mode ? "vertex" : "edge"}, {"members", members},
        {"count", fam.members.size()}, {"alternating_sum", fam.alternating_sum}},
       format_family(fam.ground, fam.members) + std::to_string(fam.members.size()) +
           " pandemic sets, alternating sum " + std::to_string(fam.alternating_sum) + "\n");
  return kExitPass;
}

int cmd_classify(const Globals& globals, const Inputs& in, bool conic) {
  SubsetMap m;
  if (conic) {
    if (in.points.empty()) throw UsageError("--conic needs --points");
    m = conic_pseudo_shade(parse_points(read_text_file(in.points)));
    if (in.dual) m = dual_map(m);
  } else {
    m = load_shade_map(in);
  }
  const auto d = classify_map(m);
  emit(globals, {{"kind", "classify"}, {"diagnostics", to_json(d, m.ground())}, {"table", table_to_json(m)}},
       diagnostics_text(d));
  return kExitPass;
}

SubsetMap load_closure(const Inputs& in, bool interval) {
  if (!in.graph.empty()) {
    const auto g = load_graph(in.graph);
    return linesearch_map(g, pick_source(g, in.source));
  }
  if (!in.poset.empty()) {
    const auto p = parse_poset(read_text_file(in.poset));
    return interval ? poset_interval_closure(p) : poset_downset_closure(p);
  }
  if (!in.points.empty()) return convex_closure(parse_points(read_text_file(in.points)));
  if (!in.table.empty()) return table_from_json(read_json_file(in.table));
  throw UsageError("give one of --graph, --poset, --points or --table");
}

int cmd_closure(const Globals& globals, const Inputs& in, const std::string& action, bool interval) {
  const auto tau = load_closure(in, interval);
  if (action == "classify") {
    const auto d = classify_closure(tau);
    emit(globals, {{"kind", "closure"}, {"diagnostics", to_json(d, tau.ground())}, {"table", table_to_json(tau)}},
         closure_text(d));
    return kExitPass;
  }
  if (action == "split") {
    const auto s = split_quasi_closure(tau);
    const auto d = classify_closure(s.restricted);
    const bool roundtrip = rejoin(s) == tau;
    emit(globals,
         {{"kind", "closure-split"}, {"loops", subset_json(tau.ground(), s.loops)},
          {"restricted", table_to_json(s.restricted)}, {"restricted_is_closure", d.is_closure()},
          {"rejoin_roundtrip", roundtrip}},
         "L = " + tau.ground().format(s.loops) + "\nrestricted map is a closure: " + (d.is_closure() ? "yes" : "no") +
             "\nrejoin recovers the map: " + (roundtrip ? "yes" : "no") + "\n");
    return roundtrip ? kExitPass : kExitFail;
  }
  throw UsageError("closure action must be classify or split");
}

int cmd_cryptomorphism(const Globals& globals, const Inputs& in) {
  const auto tau = load_closure(in, false);
  const auto shade = shade_from_closure(tau);
  const auto back = closure_from_shade(shade);
  const auto again = shade_from_closure(back);
  bool closure_ok = back == tau;
  const bool shade_ok = again == shade;
  const auto d = classify_map(shade);
  json report = {{"kind", "cryptomorphism"},
                 {"closure_roundtrip", closure_ok},
                 {"shade_roundtrip", shade_ok},
                 {"shade_diagnostics", to_json(d, shade.ground())},
                 {"shade", table_to_json(shade)}};
  std::string text = std::string("closure -> shade -> closure: ") + (closure_ok ? "identity" : "DIFFERS") +
                     "\nshade -> closure -> shade: " + (shade_ok ? "identity" : "DIFFERS") + "\n";
  if (!in.poset.empty()) {
    const bool agrees = shade == poset_lower_shade(parse_poset(read_text_file(in.poset)));
    report["matches_lower_shade"] = agrees;
    text += std::string("matches the poset lower shade: ") + (agrees ? "yes" : "no") + "\n";
    if (!agrees) closure_ok = false;
  }
  if (!in.points.empty()) {
    const bool agrees = shade == convex_shade(parse_points(read_text_file(in.points)));
    report["matches_convex_shade"] = agrees;
    text += std::string("matches the convex shade: ") + (agrees ? "yes" : "no") + "\n";
    if (!agrees) closure_ok = false;
  }
  emit(globals, report, text);
  return closure_ok && shade_ok ? kExitPass : kExitFail;
}

int cmd_bip(const Globals& globals, const Inputs& in, const std::string& action, const std::string& arg) {
  if (action == "validate") {
    if (arg.empty()) throw UsageError("bip validate needs a partition JSON file");
    const auto p = partition_from_json(read_json_file(arg));
    const auto r = validate_partition(p);
    emit(globals, {{"kind", "bip-validate"}, {"blocks", p.blocks().size()}, {"report", to_json(r, GroundSet(p.elements()))}},
         std::string(r.valid ? "valid" : "invalid") + ", " + std::to_string(p.blocks().size()) + " blocks\n");
    return r.valid ? kExitPass : kExitFail;
  }
  if (action == "from-shade") {
    const auto m = load_shade_map(in);
    const auto p = partition_from_shade(m);
    std::string text;
    for (const auto& b : p.blocks()) text += "  [" + m.ground().format(b.lower) + ", " + m.ground().format(b.upper) + "]\n";
    emit(globals, {{"kind", "bip-from-shade"}, {"partition", partition_to_json(p)}}, text);
    return kExitPass;
  }
  if (action == "count") {
    int n = 0;
    try {
      n = std::stoi(arg);
    } catch (const std::exception&) {
      throw UsageError("bip count needs an integer n");
    }
    const auto count = enumerate_partitions(n);
    emit(globals, {{"kind", "bip-count"}, {"n", n}, {"partitions", count}, {"intervals", interval_count(n)}},
         std::to_string(count) + " Boolean interval partitions, " + std::to_string(interval_count(n)) +
             " intervals\n");
    return kExitPass;
  }
  throw UsageError("bip action must be validate, from-shade or count");
}

SimplicialComplex load_complex(const Inputs& in, const std::string& sources, const std::string& target_text) {
  if (!in.complex.empty()) return complex_from_json(read_json_file(in.complex));
  if (in.graph.empty()) throw UsageError("give --graph or --complex");
  const auto g = load_graph(in.graph);
  const auto ground = g.edge_ground();
  const Mask target = target_text.empty() ? ground.full() : ground.parse(target_text).code();
  return multi_source_complex(g, pick_sources(g, sources.empty() ? in.source : sources), target,
                              parse_endpoint_rule(in.endpoint_rule));
}

json complex_summary(const SimplicialComplex& c) {
  json faces = json::array();
  for (Mask f : c.faces()) faces.push_back(subset_json(c.ground(), f));
  return {{"complex", complex_to_json(c)}, {"faces", faces}, {"face_count", c.face_count()}};
}

int cmd_morse(const Globals& globals, const Inputs& in, const std::string& action, const std::string& sources,
              const std::string& target_text, const std::string& matching_path, std::uint64_t budget) {
  if (action == "build" || action == "dual") {
    auto c = load_complex(in, sources, target_text);
    if (action == "dual") c = alexander_dual(c);
    json report = complex_summary(c);
    report["kind"] = "morse-" + action;
    emit(globals, report,
         format_family(c.ground(), c.faces()) + std::to_string(c.face_count()) + " faces\n");
    return kExitPass;
  }
  if (action == "homology") {
    const auto c = load_complex(in, sources, target_text);
    const auto h = gf2_reduced_homology(c);
    std::string text = "reduced Betti numbers over GF(2), from dimension -1:";
    for (auto b : h.reduced_betti) text += " " + std::to_string(b);
    emit(globals,
         {{"kind", "morse-homology"}, {"convention", "augmented chain complex, empty face in dimension -1"},
          {"coefficient_field", "GF(2)"}, {"homology", to_json(h)}},
         text + "\neuler sum " + std::to_string(h.euler_sum) + "\n");
    return kExitPass;
  }
  if (action == "match") {
    if (in.graph.empty()) throw UsageError("morse match needs --graph");
    const auto g = load_graph(in.graph);
    const int v = pick_sources(g, sources.empty() ? in.source : sources).front();
    const auto ground = g.edge_ground();
    const Mask target = target_text.empty() ? ground.full() : ground.parse(target_text).code();
    const auto cert = elser_certificate(edge_shade_map(g, v, parse_endpoint_rule(in.endpoint_rule)), target);
    std::string text;
    for (std::size_t i = 0; i < cert.matching->size(); ++i) {
      const Mask f = cert.matching->family()[i];
      const Mask p = cert.matching->partners()[i];
      if (f < p) text += "  " + ground.format(f) + " <-> " + ground.format(p) + "\n";
    }
    emit(globals, {{"kind", "morse-match"}, {"certificate", to_json(cert, true)}}, text + "acyclic complete matching\n");
    return kExitPass;
  }
  if (action == "verify") {
    const auto c = load_complex(in, sources, target_text);
    if (matching_path.empty()) {
      const auto cert = search_collapsibility(c, budget);
      emit(globals, {{"kind", "morse-verify"}, {"certificate", to_json(cert, true)}},
           "collapsibility certificate: " + std::string(to_string(cert.status)) + "\n");
      return kExitPass;
    }
    const DiscreteMatching d{c, matching_from_json(read_json_file(matching_path), c)};
    const auto report = verify_complete_matching(d.pairs);
    json out = {{"kind", "morse-verify"}, {"matching", to_json(report)}};
    std::string text = std::string("complete matching: ") + (report.complete() ? "yes" : "no") + "\n";
    bool acyclic = false;
    // Critical faces are allowed here; only a malformed pairing blocks the cycle search.
    const bool well_formed =
        report.involution_failures.empty() &&
        std::all_of(report.covering_failures.begin(), report.covering_failures.end(), [&](Mask f) {
          return d.pairs.partner(f) == f;
        });
    if (well_formed) {
      std::vector<std::pair<Mask, Mask>> pairs;
      for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        const Mask f = d.pairs.family()[i];
        const Mask p = d.pairs.partners()[i];
        if (covers_mask(p, f)) pairs.emplace_back(f, p);
      }
      const auto verdict = verify_acyclic_pairs(pairs);
      acyclic = verdict.acyclic;
      out["acyclic"] = verdict.acyclic;
      out["cycle"] = verdict.cycle;
      text += std::string("acyclic: ") + (verdict.acyclic ? "yes" : "no") + "\n";
    }
    emit(globals, out, text);
    return report.complete() && acyclic ? kExitPass : kExitFail;
  }
  if (action == "explore") {
    if (in.graph.empty()) throw UsageError("explore needs --graph");
    const auto g = load_graph(in.graph);
    const auto ground = g.edge_ground();
    const Mask target = target_text.empty() ? ground.full() : ground.parse(target_text).code();
    ExploreOptions options;
    options.search_budget = budget;
    const auto report = explore_open_questions(g, pick_sources(g, sources.empty() ? in.source : sources), target,
                                               options);
    // The report is the product here; print it as JSON either way.
    std::cout << report.dump(2) << "\n";
    return kExitPass;
  }
  throw UsageError("morse action must be build, match, verify, homology, dual or explore");
}

int cmd_suite(const Globals& globals, const Inputs& in, const std::string& name, int instances, int directed_share,
              std::uint64_t budget) {
  SuiteOutcome outcome;
  if (!globals.replay.empty()) {
    outcome = replay_witness(read_json_file(globals.replay));
  } else {
    if (name.empty()) throw UsageError("suite needs a name");
    VerificationRun run;
    run.suite = parse_suite(name);
    run.stream.seed = globals.seed;
    run.stream.instances = instances;
    run.stream.max_edges = globals.max_edges;
    run.stream.directed_share = directed_share;
    run.search_budget = budget;
    if (globals.max_edges < 1 || globals.max_edges > kMaxDenseElements) {
      throw UsageError("--max-edges must lie in 1..20");
    }
    if (!in.graph.empty()) run.graph = load_graph(in.graph);
    outcome = run_suite(run);
  }
  std::string text = outcome.report.at("suite").get<std::string>() + ": " +
                     outcome.report.at("status").get<std::string>() + "\n";
  for (const auto& c : outcome.report.at("checks")) {
    text += "  " + std::string(c.at("ok").get<bool>() ? "ok  " : "FAIL") + " " + c.at("name").get<std::string>() +
            " (" + std::to_string(c.at("cases").get<std::uint64_t>()) + " cases)\n";
  }
  for (const auto& n : outcome.report.at("notes")) text += "  note: " + n.get<std::string>() + "\n";
  emit(globals, outcome.report, text);
  return outcome.passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shade-lab: shade maps, infection, closures, interval partitions and Morse matchings"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  Inputs in;
  app.add_flag("--json", globals.json_output, "Emit JSON");
  app.add_option("--seed", globals.seed, "Seed for generated instances");
  app.add_option("--max-edges", globals.max_edges, "Edge cap for generated graphs");
  app.add_option("--replay", globals.replay, "Re-run the instance in a suite failure witness");

  auto add_sources = [&](CLI::App* cmd) {
    cmd->add_option("--graph", in.graph, "Graph file");
    cmd->add_option("--poset", in.poset, "Poset file");
    cmd->add_option("--points", in.points, "Point-set file");
    cmd->add_option("--table", in.table, "JSON table of 2^n subset codes");
    cmd->add_option("--source", in.source, "Source vertex (defaults to the file's)");
    cmd->add_option("--endpoint-rule", in.endpoint_rule, "endpoints (default) or source, for directed edges");
  };

  std::string graph_file;
  std::string set_text;
  auto* infect = app.add_subcommand("infect", "Shade of an edge or vertex set");
  infect->add_option("file", graph_file, "Graph file")->required();
  infect->add_option("--set", set_text, "Comma-separated names")->required();
  infect->add_option("--source", in.source, "Source vertex");
  infect->add_option("--endpoint-rule", in.endpoint_rule, "endpoints or source");
  infect->add_flag("--vertex-mode", in.vertex_mode, "Vertex infection");

  auto* pandemic = app.add_subcommand("pandemic", "Pandemic family and its alternating sum");
  pandemic->add_option("file", graph_file, "Graph file")->required();
  pandemic->add_option("--source", in.source, "Source vertex");
  pandemic->add_option("--endpoint-rule", in.endpoint_rule, "endpoints or source");
  pandemic->add_flag("--vertex-mode", in.vertex_mode, "Vertex infection");

  bool conic = false;
  bool lower = false;
  bool convex = false;
  auto* classify = app.add_subcommand("classify", "Shade-map axioms and monotonicity");
  add_sources(classify);
  classify->add_flag("--vertex-mode", in.vertex_mode, "Vertex infection map for --graph");
  classify->add_flag("--lower", lower, "Lower shade of --poset (the default)");
  classify->add_flag("--dual", in.dual, "Classify the dual map F -> Shade(E \\ F)");
  classify->add_flag("--convex", convex, "Convex shade of --points (the default)");
  classify->add_flag("--conic", conic, "Conic pseudo-shade of --points");

  std::string action;
  bool interval = false;
  auto* closure = app.add_subcommand("closure", "Quasi-closure operators");
  closure->add_option("action", action, "classify or split")->required();
  add_sources(closure);
  closure->add_flag("--interval", interval, "Order-convex closure of --poset instead of the downset closure");

  auto* crypto = app.add_subcommand("cryptomorphism", "Closure <-> shade roundtrips");
  add_sources(crypto);

  std::string bip_arg;
  auto* bip = app.add_subcommand("bip", "Boolean interval partitions");
  bip->add_option("action", action, "validate, from-shade or count")->required();
  bip->add_option("arg", bip_arg, "Partition JSON file or n");
  add_sources(bip);
  bip->add_flag("--vertex-mode", in.vertex_mode, "Vertex infection map for --graph");
  bip->add_flag("--dual", in.dual, "Use the dual map");

  std::string sources;
  std::string target_text;
  std::string matching_path;
  std::uint64_t budget = kDefaultSearchBudget;
  auto* morse = app.add_subcommand("morse", "Complexes, matchings, homology and duals");
  morse->add_option("action", action, "build, match, verify, homology, dual or explore")->required();
  add_sources(morse);
  morse->add_option("--complex", in.complex, "Complex JSON {ground, faces}");
  morse->add_option("--sources", sources, "Comma-separated source vertices");
  morse->add_option("--target-edges", target_text, "G, comma-separated edge names (default all)");
  morse->add_option("--matching", matching_path, "Matching JSON {pairs} for verify");
  morse->add_option("--budget", budget, "Node budget of the collapsibility search");

  auto* explore = app.add_subcommand("explore", "Open-question report (same as morse explore)");
  add_sources(explore);
  explore->add_option("--sources", sources, "Comma-separated source vertices");
  explore->add_option("--target-edges", target_text, "G, comma-separated edge names (default all)");
  explore->add_option("--budget", budget, "Node budget of the collapsibility search");

  std::string suite_name;
  int instances = 200;
  int directed_share = 0;
  auto* suite = app.add_subcommand("suite", "Exhaustive theorem checks");
  suite->add_option("name", suite_name,
                    "elser, vertex, shade-axioms, cryptomorphism-antimatroid, cryptomorphism-bip, morse or explore");
  suite->add_option("--instances", instances, "Number of random graphs");
  suite->add_option("--graph", in.graph, "Run on this graph instead of the random stream");
  suite->add_option("--directed-share", directed_share, "Percent of generated edges made directed");
  suite->add_option("--budget", budget, "Node budget of the collapsibility search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (infect->parsed()) {
      in.graph = graph_file;
      return cmd_infect(globals, in, set_text);
    }
    if (pandemic->parsed()) {
      in.graph = graph_file;
      return cmd_pandemic(globals, in);
    }
    if (classify->parsed()) return cmd_classify(globals, in, conic);
    if (closure->parsed()) return cmd_closure(globals, in, action, interval);
    if (crypto->parsed()) return cmd_cryptomorphism(globals, in);
    if (bip->parsed()) return cmd_bip(globals, in, action, bip_arg);
    if (morse->parsed()) return cmd_morse(globals, in, action, sources, target_text, matching_path, budget);
    if (explore->parsed()) return cmd_morse(globals, in, "explore", sources, target_text, matching_path, budget);
    if (suite->parsed()) return cmd_suite(globals, in, suite_name, instances, directed_share, budget);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    if (!e.diagnostics().is_null()) std::cerr << e.diagnostics().dump(2) << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
