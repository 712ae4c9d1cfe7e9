#include "shadelab/antimatroid.hpp"

#include "shadelab/error.hpp"
#include "shadelab/report.hpp"
#include "shadelab/shade_map.hpp"

namespace shadelab {

ClosureDiagnostics classify_closure(const SubsetMap& m) {
  const int n = m.element_count();
  if (n > 16) throw UsageError("closure classification is limited to 16 elements");
  ClosureDiagnostics d;
  const Mask codes = static_cast<Mask>(m.table().size());
  d.empty_fixed = m(0) == 0;
  for (Mask a = 0; a < codes; ++a) {
    const Mask ta = m(a);
    if (d.extensive_ok && !is_subset(a, ta)) {
      d.extensive_ok = false;
      d.extensive_witness = a;
    }
    if (d.idempotent_ok && m(ta) != ta) {
      d.idempotent_ok = false;
      d.idempotent_witness = a;
    }
    // Monotonicity along covers implies it for all A ⊆ B by transitivity.
    for (int u = 0; u < n && d.monotone_ok; ++u) {
      if (!(a & bit(u)) && !is_subset(ta, m(a | bit(u)))) {
        d.monotone_ok = false;
        d.monotone_witness = std::pair{a, u};
      }
    }
    if (!d.antimatroidal_ok) continue;
    const Mask outside = m.full() & ~ta;
    for (int y = 0; y < n && d.antimatroidal_ok; ++y) {
      if (!(outside & bit(y))) continue;
      const Mask with_y = m(a | bit(y));
      for (int z = 0; z < n; ++z) {
        if (z == y || !(outside & bit(z))) continue;
        if ((with_y & bit(z)) && (m(a | bit(z)) & bit(y))) {
          d.antimatroidal_ok = false;
          d.antimatroidal_witness = ExchangeWitness{a, y, z};
          break;
        }
      }
    }
  }
  return d;
}

namespace {

// Maps a mask over E to a mask over the kept elements.
Mask compress(Mask f, const std::vector<int>& kept) {
  Mask out = 0;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (f & bit(kept[i])) out |= bit(static_cast<int>(i));
  }
  return out;
}

Mask expand(Mask f, const std::vector<int>& kept) {
  Mask out = 0;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (f & bit(static_cast<int>(i))) out |= bit(kept[i]);
  }
  return out;
}

}  // namespace

QuasiClosureSplit split_quasi_closure(const SubsetMap& m) {
  const auto d = classify_closure(m);
  if (!d.is_quasi_closure()) throw PreconditionError("map is not a quasi-closure operator", to_json(d, m.ground()));
  QuasiClosureSplit s;
  s.ground = m.ground();
  s.loops = m(0);
  std::vector<std::string> labels;
  for (int e = 0; e < m.element_count(); ++e) {
    if (!(s.loops & bit(e))) {
      s.kept.push_back(e);
      labels.push_back(m.ground().label(e));
    }
  }
  s.restricted = SubsetMap::tabulate(GroundSet(std::move(labels)),
                                     [&](Mask f) { return compress(m(expand(f, s.kept)) & ~s.loops, s.kept); });
  return s;
}

SubsetMap rejoin(const QuasiClosureSplit& split) {
  return SubsetMap::tabulate(split.ground, [&](Mask f) {
    return expand(split.restricted(compress(f & ~split.loops, split.kept)), split.kept) | split.loops;
  });
}

SubsetMap shade_from_closure_unchecked(const SubsetMap& closure) {
  const int n = closure.element_count();
  return SubsetMap::tabulate(closure.ground(), [&](Mask f) {
    Mask shade = 0;
    for (int e = 0; e < n; ++e) {
      if (!(closure(f & ~bit(e)) & bit(e))) shade |= bit(e);
    }
    return shade;
  });
}

SubsetMap shade_from_closure(const SubsetMap& closure) {
  const auto d = classify_closure(closure);
  if (!d.is_antimatroidal_quasi_closure()) {
    throw PreconditionError("map is not an antimatroidal quasi-closure operator", to_json(d, closure.ground()));
  }
  return shade_from_closure_unchecked(closure);
}

SubsetMap closure_from_shade_unchecked(const SubsetMap& shade) {
  const Mask full = shade.full();
  return SubsetMap::tabulate(shade.ground(), [&](Mask f) { return f | (full & ~shade(f)); });
}

SubsetMap closure_from_shade(const SubsetMap& shade) {
  const auto d = classify_map(shade);
  if (!d.is_shade_map() || !d.inclusion_reversing()) {
    throw PreconditionError("map is not an inclusion-reversing shade map", to_json(d, shade.ground()));
  }
  return closure_from_shade_unchecked(shade);
}

std::vector<SubsetMap> all_quasi_closure_operators(int n) {
  if (n < 0 || n > 3) throw UsageError("quasi-closure enumeration is limited to 3 elements");
  const GroundSet ground(n);
  const Mask full = ground.full();
  const std::size_t codes = ground.power_set_size();
  std::vector<Mask> table(codes);
  for (Mask f = 0; f < codes; ++f) table[f] = f;
  std::vector<SubsetMap> out;
  // Odometer over τ(F) ⊇ F: the free part τ(F) \ F runs over submasks of E \ F.
  while (true) {
    SubsetMap m(ground, table);
    if (classify_closure(m).is_quasi_closure()) out.push_back(std::move(m));
    std::size_t f = 0;
    for (; f < codes; ++f) {
      const Mask free = full & ~static_cast<Mask>(f);
      const Mask extra = ((table[f] & free) - free) & free;
      table[f] = static_cast<Mask>(f) | extra;
      if (extra != 0) break;
    }
    if (f == codes) break;
  }
  return out;
}

}  // namespace shadelab
