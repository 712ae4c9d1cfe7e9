#include "shadelab/constructions.hpp"

#include <algorithm>

#include "shadelab/error.hpp"

namespace shadelab {

SubsetMap poset_lower_shade(const Poset& p) {
  const Mask full = p.ground().full();
  return SubsetMap::tabulate(p.ground(), [&](Mask f) { return full & ~p.strict_downset(f); });
}

SubsetMap poset_downset_closure(const Poset& p) {
  return SubsetMap::tabulate(p.ground(), [&](Mask f) { return p.downset(f); });
}

SubsetMap poset_interval_closure(const Poset& p) {
  return SubsetMap::tabulate(p.ground(), [&](Mask f) { return p.downset(f) & p.upset(f); });
}

SubsetMap convex_shade(const RationalPointSet& pts) {
  if (pts.size() > 0 && pts.dimension() < 1) throw UsageError("convex shade needs points of dimension at least 1");
  const int n = pts.size();
  return SubsetMap::tabulate(pts.ground(), [&](Mask f) {
    Mask shade = 0;
    for (int e = 0; e < n; ++e) {
      if (!is_convex_combination(pts, f, e, true)) shade |= bit(e);
    }
    return shade;
  });
}

SubsetMap convex_closure(const RationalPointSet& pts) {
  const int n = pts.size();
  return SubsetMap::tabulate(pts.ground(), [&](Mask f) {
    Mask hull = f;
    for (int e = 0; e < n; ++e) {
      if (!(hull & bit(e)) && is_convex_combination(pts, f, e, false)) hull |= bit(e);
    }
    return hull;
  });
}

SubsetMap conic_pseudo_shade(const RationalPointSet& vecs) {
  const int n = vecs.size();
  return SubsetMap::tabulate(vecs.ground(), [&](Mask f) {
    Mask shade = 0;
    for (int e = 0; e < n; ++e) {
      if (!is_nontrivial_conic_combination(vecs, f, e)) shade |= bit(e);
    }
    return shade;
  });
}

namespace {

constexpr long kLowCoordinate = -2;
constexpr long kHighCoordinate = 3;

std::vector<std::vector<long>> nonzero_vectors(int dim) {
  std::vector<std::vector<long>> out;
  std::vector<long> v(static_cast<std::size_t>(dim), kLowCoordinate);
  while (true) {
    if (std::any_of(v.begin(), v.end(), [](long c) { return c != 0; })) out.push_back(v);
    std::size_t k = v.size();
    while (k > 0 && v[k - 1] == kHighCoordinate) {
      v[k - 1] = kLowCoordinate;
      --k;
    }
    if (k == 0) break;
    ++v[k - 1];
  }
  return out;
}

}  // namespace

std::optional<ConicWitness> find_conic_axiom2_witness(std::size_t max_candidates) {
  std::size_t tried = 0;
  for (int dim = 1; dim <= 3; ++dim) {
    const auto pool = nonzero_vectors(dim);
    for (int size = 2; size <= 5; ++size) {
      if (static_cast<std::size_t>(size) > pool.size()) break;
      std::vector<std::size_t> pick(static_cast<std::size_t>(size));
      for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
      while (true) {
        if (tried == max_candidates) return std::nullopt;
        ++tried;
        std::vector<std::vector<long>> chosen;
        for (auto i : pick) chosen.push_back(pool[i]);
        auto vecs = RationalPointSet::from_integers(chosen);
        const auto d = classify_map(conic_pseudo_shade(vecs));
        if (d.axiom1_ok && !d.axiom2_ok) return ConicWitness{std::move(vecs), *d.axiom2_witness, tried};
        // Next combination in lexicographic order.
        std::size_t k = pick.size();
        while (k > 0 && pick[k - 1] == pool.size() - pick.size() + (k - 1)) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t i = k; i < pick.size(); ++i) pick[i] = pick[i - 1] + 1;
      }
    }
  }
  return std::nullopt;
}

}  // namespace shadelab
