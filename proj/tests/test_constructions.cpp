#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "shadelab/constructions.hpp"
#include "shadelab/corpus.hpp"
#include "shadelab/error.hpp"
#include "shadelab/feasibility.hpp"
#include "shadelab/io.hpp"
#include "shadelab/poset.hpp"
#include "shadelab/shade_map.hpp"

using namespace shadelab;

TEST_CASE("strict and non-strict feasibility") {
  LinearSystem s;
  s.variables = 1;
  s.add_nonnegative(0, true);            // x > 0
  s.add_variable_upper(0, 0, false);     // x ≤ 0
  CHECK_FALSE(feasible(s));

  LinearSystem t;
  t.variables = 1;
  t.add_nonnegative(0, false);           // x ≥ 0
  t.add_variable_upper(0, 0, false);     // x ≤ 0
  CHECK(feasible(t));

  LinearSystem u;
  u.variables = 2;
  u.add_equality({1, 1}, 1);             // x + y = 1
  u.add_nonnegative(0, true);
  u.add_nonnegative(1, true);
  u.add_upper({1, -1}, 0, true);         // x < y
  CHECK(feasible(u));
  u.add_upper({-1, 1}, 0, true);         // y < x as well
  CHECK_FALSE(feasible(u));

  LinearSystem v;
  v.variables = 2;
  v.add_equality({1, 1}, 1);
  v.add_equality({2, 2}, 3);             // inconsistent equalities
  CHECK_FALSE(feasible(v));

  LinearSystem w;
  w.variables = 3;
  w.add_equality({1, 2, 3}, Rational(1, 2));
  w.add_nonnegative(0, false);
  w.add_nonnegative(1, false);
  w.add_nonnegative(2, false);
  w.add_upper({0, 0, 1}, Rational(1, 7), true);
  CHECK(feasible(w));
}

TEST_CASE("convex combinations on a line") {
  const auto pts = RationalPointSet::from_integers({{0}, {1}, {2}, {2}});
  CHECK(is_convex_combination(pts, 0b0101, 1, false));
  CHECK(is_convex_combination(pts, 0b0101, 1, true));
  CHECK_FALSE(is_convex_combination(pts, 0b0011, 2, false));
  CHECK(is_convex_combination(pts, 0b0001, 0, false));
  CHECK_FALSE(is_convex_combination(pts, 0b0001, 0, true));   // λ = 1 forbidden
  CHECK(is_convex_combination(pts, 0b1000, 2, false));        // a copy of 2 at index 3
  CHECK_FALSE(is_convex_combination(pts, 0, 0, false));
}

TEST_CASE("convex combinations in the plane") {
  const auto pts = parse_points(read_text_file(fixture_path("square.points")));
  CHECK(is_convex_combination(pts, 0b01111, 4, true));
  CHECK(is_convex_combination(pts, 0b00110, 4, true));   // b, c diagonal
  CHECK_FALSE(is_convex_combination(pts, 0b00011, 4, false));
  CHECK_FALSE(is_convex_combination(pts, 0b11110, 0, false));
}

TEST_CASE("conic combinations") {
  const auto pts = RationalPointSet::from_integers({{1, 0}, {0, 1}, {1, 1}, {-1, -1}});
  CHECK(is_nontrivial_conic_combination(pts, 0b0011, 2));
  CHECK_FALSE(is_nontrivial_conic_combination(pts, 0b0100, 2));
  CHECK_FALSE(is_nontrivial_conic_combination(pts, 0b0011, 3));
  // 3 = 1·1 + 1·2
  CHECK(is_nontrivial_conic_combination(RationalPointSet::from_integers({{1}, {2}, {3}}), 0b011, 2));
}

TEST_CASE("poset constructions on the chain 1 < 2 < 3") {
  const auto chain = parse_poset(read_text_file(fixture_path("chain3.poset")));
  const auto down = poset_downset_closure(chain);
  CHECK(down(0b010) == 0b011);
  CHECK(down(0) == 0);
  const auto convex = poset_interval_closure(chain);
  CHECK(convex(0b101) == 0b111);
  CHECK(convex(0b010) == 0b010);
  CHECK(convex(0) == 0);
  const auto lower = poset_lower_shade(chain);
  CHECK(lower(0b100) == 0b100);
  CHECK(lower(0) == 0b111);
  const auto d = classify_map(lower);
  CHECK(d.is_shade_map());
  CHECK(d.inclusion_reversing());

  const auto anti = Poset::antichain(3);
  for (Mask f = 0; f < 8; ++f) CHECK(poset_downset_closure(anti)(f) == f);
}

TEST_CASE("posets are transitively closed and cycles are rejected") {
  const auto p = Poset::from_relations({"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(p.less(0, 2));
  CHECK_FALSE(p.less(2, 0));
  CHECK_THROWS_AS(Poset::from_relations({"a", "b"}, {{0, 1}, {1, 0}}), UsageError);
  CHECK_THROWS_AS(Poset::from_relations({"a"}, {{0, 0}}), UsageError);
}

TEST_CASE("labelled poset counts") {
  // Labelled partial orders on n points: 1, 1, 3, 19, 219, 4231.
  CHECK(all_posets(0).size() == 1);
  CHECK(all_posets(1).size() == 1);
  CHECK(all_posets(2).size() == 3);
  CHECK(all_posets(3).size() == 19);
  CHECK(all_posets(4).size() == 219);
  CHECK(all_posets(5).size() == 4231);
}

TEST_CASE("convex constructions on collinear points") {
  const auto pts = parse_points(read_text_file(fixture_path("collinear.points")));
  const auto tau = convex_closure(pts);
  CHECK(tau(0b101) == 0b111);
  CHECK(tau(0b010) == 0b010);
  CHECK(tau(0) == 0);
  const auto shade = convex_shade(pts);
  CHECK(shade(0b101) == 0b101);  // the middle point is shaded out
  const auto d = classify_map(shade);
  CHECK(d.is_shade_map());
  CHECK(d.inclusion_reversing());
}

TEST_CASE("convex shades of random point sets are inclusion-reversing shade maps") {
  for (const auto& pts : point_set_corpus(3, 25, 6, 3)) {
    const auto d = classify_map(convex_shade(pts));
    REQUIRE(d.is_shade_map());
    REQUIRE(d.inclusion_reversing());
  }
}

TEST_CASE("conic pseudo-shade keeps Axiom 1 and can lose Axiom 2") {
  const auto rays = parse_points(read_text_file(fixture_path("rays.points")));
  const auto d = classify_map(conic_pseudo_shade(rays));
  CHECK(d.axiom1_ok);
  CHECK_FALSE(d.axiom2_ok);

  const auto found = find_conic_axiom2_witness();
  REQUIRE(found);
  const auto m = conic_pseudo_shade(found->vectors);
  const auto [f, u] = found->axiom2;
  CHECK((m(f) & bit(u)) == 0);
  CHECK(m(f & ~bit(u)) != m(f));
  CHECK(classify_map(m).axiom1_ok);
}

TEST_CASE("point parsing") {
  const auto pts = parse_points("point a 1/2 -3\npoint b 0 4/8\n");
  CHECK(pts.dimension() == 2);
  CHECK(pts.point(0)[0] == Rational(1, 2));
  CHECK(pts.point(1)[1] == Rational(1, 2));
  CHECK_THROWS_AS(parse_points("point a 1\npoint b 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_points("point a 1/0\n"), ParseError);
  CHECK_THROWS_AS(parse_points("point a x\n"), ParseError);
  CHECK_THROWS_AS(parse_points("point a 1\npoint a 2\n"), ParseError);
}
