#pragma once

// Shade-map axioms, monotonicity, duality and the generalized alternating sums.
//
// For a map Shade : P(E) -> P(E) and u ∈ E \ Shade F:
//   Axiom 1   Shade(F ∪ {u}) = Shade F        Axiom 1'  Shade(F ∪ {u}) ⊆ Shade F
//   Axiom 2   Shade(F \ {u}) = Shade F        Axiom 2'  Shade(F \ {u}) ⊆ Shade F
// and for u ∈ E \ F:
//   Axiom 3   Shade F = Shade(F ∪ {u})  or  u ∈ Shade F ∩ Shade(F ∪ {u}).
// A shade map satisfies Axioms 1 and 2.

#include <cstdint>
#include <optional>
#include <string_view>

#include "shadelab/subset_map.hpp"

namespace shadelab {

enum class Monotonicity { preserving, reversing, both, neither };

std::string_view to_string(Monotonicity m);

/// A counterexample (F, u). For the monotonicity checks u is the element
/// with F ≺ F ∪ {u}.
struct AxiomWitness {
  Mask set = 0;
  int element = 0;

  friend bool operator==(const AxiomWitness&, const AxiomWitness&) = default;
};

struct ShadeDiagnostics {
  bool axiom1_ok = true;
  bool axiom2_ok = true;
  bool axiom1_weak_ok = true;
  bool axiom2_weak_ok = true;
  bool axiom3_ok = true;
  Monotonicity monotonicity = Monotonicity::both;

  // First failure in (code(F), u) order, one per failed check.
  std::optional<AxiomWitness> axiom1_witness;
  std::optional<AxiomWitness> axiom2_witness;
  std::optional<AxiomWitness> axiom1_weak_witness;
  std::optional<AxiomWitness> axiom2_weak_witness;
  std::optional<AxiomWitness> axiom3_witness;
  std::optional<AxiomWitness> preserving_witness;
  std::optional<AxiomWitness> reversing_witness;

  bool is_shade_map() const { return axiom1_ok && axiom2_ok; }
  bool inclusion_preserving() const {
    return monotonicity == Monotonicity::preserving || monotonicity == Monotonicity::both;
  }
  bool inclusion_reversing() const {
    return monotonicity == Monotonicity::reversing || monotonicity == Monotonicity::both;
  }
  /// The two equivalences every map must satisfy: (1 ∧ 2) ⇔ 3 and
  /// (1 ∧ 2) ⇔ (1' ∧ 2').
  bool cross_checks_hold() const {
    return (is_shade_map() == axiom3_ok) && (is_shade_map() == (axiom1_weak_ok && axiom2_weak_ok));
  }
};

/// Exhaustive sweep of every axiom and of monotonicity. Throws InternalError
/// if the cross-checks fail, since they hold for every map.
ShadeDiagnostics classify_map(const SubsetMap& m);

/// F ↦ m(E \ F). An involution.
SubsetMap dual_map(const SubsetMap& m);

struct AlternatingSums {
  std::int64_t contained = 0;      // Σ over F with G ⊆ m(F)
  std::int64_t not_contained = 0;  // Σ over F with G ⊄ m(F)

  friend bool operator==(const AlternatingSums&, const AlternatingSums&) = default;
};

AlternatingSums shade_alternating_sums(const SubsetMap& m, Mask target);
AlternatingSums shade_alternating_sums(const SubsetMap& m, const Subset& target);

}  // namespace shadelab
