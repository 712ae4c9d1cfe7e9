#include "shadelab/feasibility.hpp"

#include <algorithm>

#include "shadelab/error.hpp"

namespace shadelab {

void LinearSystem::add_equality(std::vector<Rational> coef, Rational rhs) {
  coef.resize(static_cast<std::size_t>(variables));
  equalities.push_back({std::move(coef), std::move(rhs), false});
}

void LinearSystem::add_upper(std::vector<Rational> coef, Rational rhs, bool strict) {
  coef.resize(static_cast<std::size_t>(variables));
  inequalities.push_back({std::move(coef), std::move(rhs), strict});
}

void LinearSystem::add_nonnegative(int i, bool strict) {
  std::vector<Rational> coef(static_cast<std::size_t>(variables));
  coef[static_cast<std::size_t>(i)] = -1;
  add_upper(std::move(coef), 0, strict);
}

void LinearSystem::add_variable_upper(int i, Rational bound, bool strict) {
  std::vector<Rational> coef(static_cast<std::size_t>(variables));
  coef[static_cast<std::size_t>(i)] = 1;
  add_upper(std::move(coef), std::move(bound), strict);
}

namespace {

bool all_zero(const std::vector<Rational>& coef) {
  return std::all_of(coef.begin(), coef.end(), [](const Rational& c) { return c == 0; });
}

// row += factor * other
void add_scaled(LinearRow& row, const LinearRow& other, const Rational& factor) {
  for (std::size_t k = 0; k < row.coef.size(); ++k) row.coef[k] += factor * other.coef[k];
  row.rhs += factor * other.rhs;
}

// A row with no variables left is a plain statement about its right-hand side.
bool trivially_satisfied(const LinearRow& row) { return row.strict ? 0 < row.rhs : 0 <= row.rhs; }

// Scales so the first nonzero coefficient has magnitude 1; lets duplicate rows
// be dropped.
void normalize(LinearRow& row) {
  for (const auto& c : row.coef) {
    if (c != 0) {
      const Rational scale = c < 0 ? Rational(-c) : c;
      for (auto& x : row.coef) x /= scale;
      row.rhs /= scale;
      return;
    }
  }
}

bool same_row(const LinearRow& a, const LinearRow& b) {
  return a.strict == b.strict && a.rhs == b.rhs && a.coef == b.coef;
}

}  // namespace

bool feasible(LinearSystem system) {
  const auto n = static_cast<std::size_t>(system.variables);
  auto& eqs = system.equalities;
  auto& rows = system.inequalities;

  // Gaussian substitution of equalities.
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    LinearRow pivot = eqs[e];
    std::size_t j = 0;
    while (j < n && pivot.coef[j] == 0) ++j;
    if (j == n) {
      if (pivot.rhs != 0) return false;
      continue;
    }
    for (std::size_t o = e + 1; o < eqs.size(); ++o) {
      if (eqs[o].coef[j] != 0) add_scaled(eqs[o], pivot, -eqs[o].coef[j] / pivot.coef[j]);
    }
    for (auto& row : rows) {
      if (row.coef[j] != 0) add_scaled(row, pivot, -row.coef[j] / pivot.coef[j]);
    }
  }

  // Fourier–Motzkin on what is left.
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<LinearRow> pos, neg, next;
    for (auto& row : rows) {
      if (row.coef[j] > 0) {
        pos.push_back(std::move(row));
      } else if (row.coef[j] < 0) {
        neg.push_back(std::move(row));
      } else {
        next.push_back(std::move(row));
      }
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        LinearRow combined = p;
        const Rational a = p.coef[j];
        const Rational b = -q.coef[j];
        for (std::size_t k = 0; k < n; ++k) combined.coef[k] = b * p.coef[k] + a * q.coef[k];
        combined.rhs = b * p.rhs + a * q.rhs;
        combined.strict = p.strict || q.strict;
        combined.coef[j] = 0;
        next.push_back(std::move(combined));
      }
    }
    rows.clear();
    for (auto& row : next) {
      if (all_zero(row.coef)) {
        if (!trivially_satisfied(row)) return false;
        continue;
      }
      normalize(row);
      const bool duplicate =
          std::any_of(rows.begin(), rows.end(), [&](const LinearRow& r) { return same_row(r, row); });
      if (!duplicate) rows.push_back(std::move(row));
    }
  }
  return std::all_of(rows.begin(), rows.end(), trivially_satisfied);
}

RationalPointSet::RationalPointSet(std::vector<std::string> labels, std::vector<std::vector<Rational>> points)
    : ground_(std::move(labels)), points_(std::move(points)) {
  if (static_cast<std::size_t>(ground_.size()) != points_.size()) {
    throw UsageError("point set has " + std::to_string(points_.size()) + " points but " +
                     std::to_string(ground_.size()) + " labels");
  }
  dimension_ = points_.empty() ? 0 : static_cast<int>(points_.front().size());
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != dimension_) throw UsageError("points do not share one dimension");
  }
}

RationalPointSet RationalPointSet::from_integers(const std::vector<std::vector<long>>& points) {
  std::vector<std::vector<Rational>> converted;
  for (const auto& p : points) {
    std::vector<Rational> q;
    for (long c : p) q.emplace_back(c);
    converted.push_back(std::move(q));
  }
  return RationalPointSet(GroundSet(static_cast<int>(points.size())).labels(), std::move(converted));
}

namespace {

std::vector<int> members(Mask f) {
  std::vector<int> out;
  for (Mask rest = f; rest; rest &= rest - 1) out.push_back(lowest_element(rest));
  return out;
}

// Σ λ_s s = target, one equality per coordinate.
LinearSystem combination_system(const RationalPointSet& pts, const std::vector<int>& support, int target) {
  LinearSystem sys;
  sys.variables = static_cast<int>(support.size());
  for (int d = 0; d < pts.dimension(); ++d) {
    std::vector<Rational> coef;
    for (int s : support) coef.push_back(pts.point(s)[static_cast<std::size_t>(d)]);
    sys.add_equality(std::move(coef), pts.point(target)[static_cast<std::size_t>(d)]);
  }
  return sys;
}

}  // namespace

bool is_convex_combination(const RationalPointSet& pts, Mask f, int target, bool nontrivial) {
  const auto support = members(f);
  if (support.empty()) return false;
  LinearSystem sys = combination_system(pts, support, target);
  sys.add_equality(std::vector<Rational>(support.size(), Rational(1)), 1);
  for (int i = 0; i < sys.variables; ++i) {
    sys.add_nonnegative(i, false);
    if (nontrivial) sys.add_variable_upper(i, 1, true);
  }
  return feasible(std::move(sys));
}

bool is_nontrivial_conic_combination(const RationalPointSet& pts, Mask f, int target) {
  const auto support = members(f);
  for (std::size_t a = 0; a < support.size(); ++a) {
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      LinearSystem sys = combination_system(pts, support, target);
      for (int i = 0; i < sys.variables; ++i) {
        const bool forced = static_cast<std::size_t>(i) == a || static_cast<std::size_t>(i) == b;
        sys.add_nonnegative(i, forced);
      }
      if (feasible(std::move(sys))) return true;
    }
  }
  return false;
}

}  // namespace shadelab
