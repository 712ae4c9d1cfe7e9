#include "shadelab/shade_map.hpp"

#include "shadelab/error.hpp"

namespace shadelab {

SubsetMap::SubsetMap(GroundSet ground, std::vector<Mask> table) : ground_(std::move(ground)), table_(std::move(table)) {
  ground_.require_dense();
  if (table_.size() != ground_.power_set_size()) {
    throw UsageError("map table has " + std::to_string(table_.size()) + " entries; expected " +
                     std::to_string(ground_.power_set_size()));
  }
  const Mask full = ground_.full();
  for (Mask f = 0; f < table_.size(); ++f) {
    if (!is_subset(table_[f], full)) {
      throw UsageError("map entry at code " + std::to_string(f) + " is not a subset of the ground set");
    }
  }
}

Subset SubsetMap::at(const Subset& f) const {
  if (f.width() != element_count()) throw UsageError("subset does not belong to the map's ground set");
  return Subset(table_[f.code()], element_count());
}

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::preserving: return "preserving";
    case Monotonicity::reversing: return "reversing";
    case Monotonicity::both: return "both";
    case Monotonicity::neither: return "neither";
  }
  return "neither";
}

namespace {

void record(bool& ok, std::optional<AxiomWitness>& witness, Mask f, int u) {
  if (ok) {
    ok = false;
    witness = AxiomWitness{f, u};
  }
}

}  // namespace

ShadeDiagnostics classify_map(const SubsetMap& m) {
  ShadeDiagnostics d;
  bool preserving = true;
  bool reversing = true;
  const int n = m.element_count();
  const Mask codes = static_cast<Mask>(m.table().size());
  for (Mask f = 0; f < codes; ++f) {
    const Mask shade = m(f);
    for (int u = 0; u < n; ++u) {
      const Mask ub = bit(u);
      if (!(shade & ub)) {
        const Mask grown = m(f | ub);
        const Mask shrunk = m(f & ~ub);
        if (grown != shade) record(d.axiom1_ok, d.axiom1_witness, f, u);
        if (!is_subset(grown, shade)) record(d.axiom1_weak_ok, d.axiom1_weak_witness, f, u);
        if (shrunk != shade) record(d.axiom2_ok, d.axiom2_witness, f, u);
        if (!is_subset(shrunk, shade)) record(d.axiom2_weak_ok, d.axiom2_weak_witness, f, u);
      }
      if (!(f & ub)) {
        const Mask up = m(f | ub);
        if (!(shade == up || ((shade & ub) && (up & ub)))) record(d.axiom3_ok, d.axiom3_witness, f, u);
        // Covering pairs suffice for monotonicity: any A ⊆ B is joined by a
        // chain of covers, and ⊆ is transitive along the chain.
        if (!is_subset(shade, up)) record(preserving, d.preserving_witness, f, u);
        if (!is_subset(up, shade)) record(reversing, d.reversing_witness, f, u);
      }
    }
  }
  if (preserving && reversing) {
    d.monotonicity = Monotonicity::both;
  } else if (preserving) {
    d.monotonicity = Monotonicity::preserving;
  } else if (reversing) {
    d.monotonicity = Monotonicity::reversing;
  } else {
    d.monotonicity = Monotonicity::neither;
  }
  if (!d.cross_checks_hold()) {
    throw InternalError("shade axiom cross-check failed: axioms 1/2 disagree with axiom 3 or with axioms 1'/2'");
  }
  return d;
}

SubsetMap dual_map(const SubsetMap& m) {
  const Mask full = m.full();
  return SubsetMap::tabulate(m.ground(), [&](Mask f) { return m(full & ~f); });
}

AlternatingSums shade_alternating_sums(const SubsetMap& m, Mask target) {
  if (!is_subset(target, m.full())) throw UsageError("target set is not a subset of the ground set");
  AlternatingSums sums;
  const Mask codes = static_cast<Mask>(m.table().size());
  for (Mask f = 0; f < codes; ++f) {
    if (is_subset(target, m(f))) {
      sums.contained += sign_of(f);
    } else {
      sums.not_contained += sign_of(f);
    }
  }
  return sums;
}

AlternatingSums shade_alternating_sums(const SubsetMap& m, const Subset& target) {
  if (target.width() != m.element_count()) throw UsageError("target set does not belong to the map's ground set");
  return shade_alternating_sums(m, target.code());
}

}  // namespace shadelab
