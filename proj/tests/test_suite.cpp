#include <doctest.h>

#include "fixtures.hpp"
#include "shadelab/error.hpp"
#include "shadelab/suite.hpp"

using namespace shadelab;
using nlohmann::json;

namespace {

VerificationRun small_run(Suite suite, std::uint64_t seed = 42) {
  VerificationRun run;
  run.suite = suite;
  run.stream.seed = seed;
  run.stream.instances = 12;
  run.stream.max_edges = 7;
  return run;
}

}  // namespace

TEST_CASE("suite names") {
  for (auto s : {Suite::elser, Suite::vertex, Suite::shade_axioms, Suite::cryptomorphism_antimatroid,
                 Suite::cryptomorphism_bip, Suite::morse, Suite::explore}) {
    CHECK(parse_suite(to_string(s)) == s);
  }
  CHECK_THROWS_AS(parse_suite("nope"), UsageError);
}

TEST_CASE("every suite passes on a small stream") {
  for (auto s : {Suite::elser, Suite::vertex, Suite::shade_axioms, Suite::cryptomorphism_bip, Suite::morse,
                 Suite::explore}) {
    CAPTURE(to_string(s));
    const auto out = run_suite(small_run(s));
    CHECK(out.passed);
    CHECK(out.report.at("checks").size() > 0);
  }
}

TEST_CASE("reports are deterministic apart from timing") {
  const auto a = run_suite(small_run(Suite::elser));
  const auto b = run_suite(small_run(Suite::elser));
  CHECK(a.report.contains("timing_ms"));
  CHECK(strip_timing(a.report) == strip_timing(b.report));
  CHECK_FALSE(strip_timing(a.report).contains("timing_ms"));
}

TEST_CASE("a single graph can be checked") {
  auto run = small_run(Suite::morse);
  run.graph = fixture_graph("example1.graph");
  const auto out = run_suite(run);
  CHECK(out.passed);
}

TEST_CASE("witnesses replay on the instance they carry") {
  json witness = {{"suite", "elser"}, {"check", "pandemic_sum_zero"}, {"seed", 42}};
  witness["instance"] = graph_to_json(fixture_graph("example2.graph"));
  const auto out = replay_witness(witness);
  CHECK(out.passed);
  CHECK_THROWS_AS(replay_witness(json::object()), UsageError);
}
