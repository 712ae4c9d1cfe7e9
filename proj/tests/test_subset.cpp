#include <doctest.h>

#include <set>

#include "shadelab/error.hpp"
#include "shadelab/subset.hpp"
#include "shadelab/subset_map.hpp"

using namespace shadelab;

TEST_CASE("labels parse and format in index order") {
  GroundSet e(std::vector<std::string>{"a", "b", "c"});
  CHECK(e.parse("c,a").code() == 0b101);
  CHECK(e.parse("{a, c}").code() == 0b101);
  CHECK(e.parse("").empty());
  CHECK(e.format(0b110) == "{b,c}");
  CHECK(e.format(0) == "{}");
  CHECK_THROWS_AS(e.parse("d"), UsageError);
  CHECK_THROWS_AS(GroundSet(std::vector<std::string>{"a", "a"}), UsageError);
}

TEST_CASE("numbered ground sets start at 1") {
  GroundSet e(4);
  CHECK(e.label(0) == "1");
  CHECK(e.parse("2,4").code() == 0b1010);
  CHECK(e.full() == 0b1111);
}

TEST_CASE("covering relation") {
  CHECK(covers_mask(0b001, 0b011));
  CHECK_FALSE(covers_mask(0b001, 0b001));
  CHECK_FALSE(covers_mask(0b001, 0b111));
  CHECK_FALSE(covers_mask(0b010, 0b101));
  CHECK(covers(Subset(0, 2), Subset(2, 2)));
  CHECK_THROWS_AS(covers(Subset(0, 2), Subset(2, 3)), UsageError);
}

TEST_CASE("submasks are visited once each in ascending order") {
  std::vector<Mask> seen;
  for_each_submask_ascending(0b1011, [&](Mask s) { seen.push_back(s); });
  CHECK(seen == std::vector<Mask>{0, 1, 2, 3, 8, 9, 10, 11});
}

TEST_CASE("Boolean interval members") {
  // [1, 123] = {1, 12, 13, 123}
  auto m = interval_members(Subset(0b001, 3), Subset(0b111, 3));
  std::vector<Mask> codes;
  for (const auto& s : m) codes.push_back(s.code());
  CHECK(codes == std::vector<Mask>{0b001, 0b011, 0b101, 0b111});
  BooleanInterval narrow(Subset(0b001, 3), Subset(0b101, 3));
  CHECK(narrow.member_count() == 2);
  CHECK(narrow.contains(0b101));
  CHECK_FALSE(narrow.contains(0b011));
  CHECK_THROWS_AS(interval_members(Subset(0b010, 3), Subset(0b001, 3)), UsageError);
}

TEST_CASE("alternating sums") {
  std::vector<Mask> all;
  for (Mask f = 0; f < 16; ++f) all.push_back(f);
  CHECK(alternating_sum(all) == 0);
  CHECK(alternating_sum(std::vector<Mask>{0}) == 1);
  CHECK(alternating_sum(std::vector<Mask>{1, 2, 3}) == -1);
}

TEST_CASE("complete matching verification") {
  // {} <-> {1}, {2} <-> {1,2}
  MatchingTable good(2, {0, 1, 2, 3}, {1, 0, 3, 2});
  auto r = verify_complete_matching(good);
  CHECK(r.complete());
  CHECK(r.alternating_sum == 0);

  MatchingTable fixed(2, {0, 1}, {0, 1});
  r = verify_complete_matching(fixed);
  CHECK_FALSE(r.complete());
  CHECK(r.fixed_points == std::vector<Mask>{0, 1});

  // {} -> {1,2} is not a cover
  MatchingTable far(2, {0, 3}, {3, 0});
  CHECK(verify_complete_matching(far).covering_failures.size() == 2);

  MatchingTable leaks(2, {0}, {1});
  CHECK_THROWS_AS(verify_complete_matching(leaks), StructuralError);
}

TEST_CASE("dense tables are capped") {
  CHECK_THROWS_AS(GroundSet(kMaxDenseElements + 1).require_dense(), UsageError);
  CHECK_NOTHROW(GroundSet(3).require_dense());
  auto id = SubsetMap::tabulate(GroundSet(3), [](Mask f) { return f; });
  CHECK(id(0b101) == 0b101);
  CHECK(id.at(Subset(0b011, 3)) == Subset(0b011, 3));
}
