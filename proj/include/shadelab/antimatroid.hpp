#pragma once

// Quasi-closure operators τ on P(E):
//   1  A ⊆ τ(A)                      (extensive)
//   2  A ⊆ B  ⇒  τ(A) ⊆ τ(B)         (monotone)
//   3  τ(τ(A)) = τ(A)                (idempotent)
// A closure operator also has τ(∅) = ∅. The operator is antimatroidal when
//   4  y ≠ z both outside τ(X) and z ∈ τ(X ∪ {y})  ⇒  y ∉ τ(X ∪ {z}).

#include <optional>
#include <vector>

#include "shadelab/subset_map.hpp"

namespace shadelab {

/// (X, y, z) with z ∈ τ(X ∪ {y}) and y ∈ τ(X ∪ {z}).
struct ExchangeWitness {
  Mask set = 0;
  int y = 0;
  int z = 0;

  friend bool operator==(const ExchangeWitness&, const ExchangeWitness&) = default;
};

struct ClosureDiagnostics {
  bool extensive_ok = true;
  bool monotone_ok = true;
  bool idempotent_ok = true;
  bool antimatroidal_ok = true;
  bool empty_fixed = true;  // τ(∅) = ∅

  std::optional<Mask> extensive_witness;               // A with A ⊄ τ(A)
  std::optional<std::pair<Mask, int>> monotone_witness;  // (A, u) with τ(A) ⊄ τ(A ∪ {u})
  std::optional<Mask> idempotent_witness;              // A with τ(τ(A)) ≠ τ(A)
  std::optional<ExchangeWitness> antimatroidal_witness;

  bool is_quasi_closure() const { return extensive_ok && monotone_ok && idempotent_ok; }
  bool is_closure() const { return is_quasi_closure() && empty_fixed; }
  bool is_antimatroidal_quasi_closure() const { return is_quasi_closure() && antimatroidal_ok; }
};

/// Exhaustive check of properties 1 to 4, |E| ≤ 16. Witnesses are the first
/// failures in (code, element) order.
ClosureDiagnostics classify_closure(const SubsetMap& m);

/// A quasi-closure τ with L = τ(∅) removed: σ(F) = τ(F) \ L on E \ L.
struct QuasiClosureSplit {
  GroundSet ground;        // the original E
  Mask loops = 0;          // L
  std::vector<int> kept;   // original indices of E \ L, ascending
  SubsetMap restricted;    // σ on E \ L, element i of it is kept[i]
};

/// PreconditionError (with diagnostics) unless m is a quasi-closure operator.
QuasiClosureSplit split_quasi_closure(const SubsetMap& m);
/// τ(F) = σ(F \ L) ∪ L.
SubsetMap rejoin(const QuasiClosureSplit& split);

/// Shade F = {e | e ∉ τ(F \ {e})}. Requires an antimatroidal quasi-closure.
SubsetMap shade_from_closure(const SubsetMap& closure);
/// The same formula with no precondition check.
SubsetMap shade_from_closure_unchecked(const SubsetMap& closure);

/// τ(F) = F ∪ (E \ Shade F). Requires an inclusion-reversing shade map.
SubsetMap closure_from_shade(const SubsetMap& shade);
SubsetMap closure_from_shade_unchecked(const SubsetMap& shade);

/// Every quasi-closure operator on n ≤ 3 elements, found by filtering all
/// extensive tables.
std::vector<SubsetMap> all_quasi_closure_operators(int n);

}  // namespace shadelab
