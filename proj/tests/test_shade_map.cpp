#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "shadelab/corpus.hpp"
#include "shadelab/graph.hpp"
#include "shadelab/shade_map.hpp"

using namespace shadelab;

namespace {

bool preserving_table(const std::vector<Mask>& t) {
  for (Mask a = 0; a < t.size(); ++a) {
    for (Mask b = 0; b < t.size(); ++b) {
      if (is_subset(a, b) && !is_subset(t[a], t[b])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("axiom verdicts agree with the definitions on every map of two elements") {
  int shade_maps = 0;
  oracle::for_each_table(2, [&](const std::vector<Mask>& t) {
    const SubsetMap m(GroundSet(2), t);
    const auto d = classify_map(m);
    REQUIRE(d.is_shade_map() == oracle::is_shade_table(t, 2));
    REQUIRE(d.inclusion_preserving() == preserving_table(t));
    REQUIRE(d.inclusion_reversing() == oracle::is_reversing_table(t));
    REQUIRE(d.cross_checks_hold());
    shade_maps += d.is_shade_map();
  });
  CHECK(shade_maps > 0);
}

TEST_CASE("axiom verdicts on sampled maps of three elements") {
  Rng rng(11);
  for (int trial = 0; trial < 4000; ++trial) {
    std::vector<Mask> t(8);
    for (auto& x : t) x = static_cast<Mask>(rng.below(8));
    const auto d = classify_map(SubsetMap(GroundSet(3), t));
    REQUIRE(d.is_shade_map() == oracle::is_shade_table(t, 3));
    REQUIRE(d.cross_checks_hold());
  }
}

TEST_CASE("witnesses are the first failure in (F, u) order") {
  // Shade F = F fails Axiom 1 at F = {}, u = 1: Shade{1} = {1} ≠ {}.
  const auto id = SubsetMap::tabulate(GroundSet(2), [](Mask f) { return f; });
  const auto d = classify_map(id);
  CHECK_FALSE(d.axiom1_ok);
  REQUIRE(d.axiom1_witness);
  CHECK(*d.axiom1_witness == AxiomWitness{0, 0});
  CHECK(d.axiom2_ok);  // removing u ∉ F changes nothing
  CHECK(d.monotonicity == Monotonicity::preserving);
}

TEST_CASE("constant maps") {
  const auto all = SubsetMap::tabulate(GroundSet(3), [](Mask) { return Mask{0b111}; });
  auto d = classify_map(all);
  CHECK(d.is_shade_map());
  CHECK(d.monotonicity == Monotonicity::both);
  const auto none = SubsetMap::tabulate(GroundSet(3), [](Mask) { return Mask{0}; });
  d = classify_map(none);
  // Every u is outside the shade, so every F must share one value: it does.
  CHECK(d.is_shade_map());
}

TEST_CASE("duals of graph shade maps") {
  const auto g = fixture_graph("example1.graph");
  const auto m = edge_shade_map(g, g.require_source());
  const auto d = dual_map(m);
  CHECK(dual_map(d) == m);
  const auto diag = classify_map(d);
  CHECK(diag.is_shade_map());
  CHECK(diag.inclusion_reversing());
  CHECK(d(0) == m.full());
}

TEST_CASE("graph shade maps satisfy both axioms and preserve inclusion") {
  GraphStreamSpec spec;
  spec.instances = 50;
  spec.max_edges = 10;
  for (const auto& g : graph_stream(spec)) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto m = edge_shade_map(g, v);
      const auto t = std::vector<Mask>(m.table().begin(), m.table().end());
      REQUIRE(oracle::is_shade_table(t, m.element_count()));
      const auto d = classify_map(m);
      REQUIRE(d.is_shade_map());
      REQUIRE(d.inclusion_preserving());
      const auto vd = classify_map(vertex_shade_map(g, v));
      REQUIRE(vd.is_shade_map());
      REQUIRE(vd.inclusion_preserving());
    }
  }
}

TEST_CASE("alternating sums over contained and non-contained targets") {
  const auto g = fixture_graph("example1.graph");
  const auto m = edge_shade_map(g, g.require_source());
  const Mask full = m.full();
  for (Mask target : {Mask{0}, Mask{1}, Mask{0b10000}, full, Mask{0b10100101}}) {
    std::int64_t contained = 0;
    std::int64_t outside = 0;
    for (Mask f = 0; f <= full; ++f) {
      (is_subset(target, m(f)) ? contained : outside) += sign_of(f);
    }
    const auto sums = shade_alternating_sums(m, target);
    CHECK(sums.contained == contained);
    CHECK(sums.not_contained == outside);
    CHECK(sums.contained == 0);
    CHECK(sums.not_contained == 0);
  }
}

TEST_CASE("shade is unchanged by adding or removing elements outside it") {
  const auto g = fixture_graph("example1.graph");
  const auto m = edge_shade_map(g, g.require_source());
  for (Mask a = 0; a <= m.full(); a += 7) {
    for (Mask b = 0; b <= m.full(); ++b) {
      if (b & m(a)) continue;
      REQUIRE(m(a | b) == m(a));
      REQUIRE(m(a & ~b) == m(a));
    }
  }
}
