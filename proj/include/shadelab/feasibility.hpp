#pragma once

// Exact feasibility of small linear systems with strict and non-strict
// inequalities over the rationals. Equalities are eliminated by Gaussian
// substitution, the remaining inequalities by Fourier–Motzkin elimination.
// Strictness propagates: a combination is strict iff a strict row takes part
// with a positive multiplier.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shadelab/subset.hpp"

namespace shadelab {

using Rational = boost::multiprecision::cpp_rational;

struct LinearRow {
  std::vector<Rational> coef;
  Rational rhs;
  bool strict = false;  // inequalities only: coef·x < rhs instead of ≤
};

struct LinearSystem {
  int variables = 0;
  std::vector<LinearRow> equalities;    // coef·x = rhs
  std::vector<LinearRow> inequalities;  // coef·x ≤ rhs or coef·x < rhs

  void add_equality(std::vector<Rational> coef, Rational rhs);
  void add_upper(std::vector<Rational> coef, Rational rhs, bool strict);
  /// x_i ≥ 0, or x_i > 0 when strict.
  void add_nonnegative(int i, bool strict);
  /// x_i ≤ bound, or x_i < bound when strict.
  void add_variable_upper(int i, Rational bound, bool strict);
};

bool feasible(LinearSystem system);

/// One point per ground-set element, all of the same dimension.
class RationalPointSet {
 public:
  RationalPointSet() = default;
  RationalPointSet(std::vector<std::string> labels, std::vector<std::vector<Rational>> points);
  /// Integer coordinates, labels "1", "2", ...
  static RationalPointSet from_integers(const std::vector<std::vector<long>>& points);

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<Rational>& point(int i) const { return points_.at(static_cast<std::size_t>(i)); }
  const GroundSet& ground() const { return ground_; }

 private:
  GroundSet ground_;
  int dimension_ = 0;
  std::vector<std::vector<Rational>> points_;
};

/// target = Σ_{s∈F} λ_s s with λ ≥ 0 and Σ λ_s = 1. With `nontrivial`, every
/// λ_s must also be strictly below 1.
bool is_convex_combination(const RationalPointSet& pts, Mask f, int target, bool nontrivial);

/// target = Σ_{s∈F} λ_s s with λ ≥ 0 and at least two λ_s strictly positive.
bool is_nontrivial_conic_combination(const RationalPointSet& pts, Mask f, int target);

}  // namespace shadelab
