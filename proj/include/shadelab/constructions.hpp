#pragma once

// Concrete shade maps and closure operators built from posets and point sets.

#include <optional>

#include "shadelab/feasibility.hpp"
#include "shadelab/poset.hpp"
#include "shadelab/shade_map.hpp"

namespace shadelab {

/// Shade F = E \ {e | e < f for some f ∈ F}
SubsetMap poset_lower_shade(const Poset& p);

/// τ(F) = {e | e ≤ f for some f ∈ F}
SubsetMap poset_downset_closure(const Poset& p);

/// τ(F) = {e | g ≤ e ≤ f for some f, g ∈ F}
SubsetMap poset_interval_closure(const Poset& p);

/// e ∈ Shade F iff e is not a convex combination of F with every coefficient
/// strictly below 1.
SubsetMap convex_shade(const RationalPointSet& pts);

/// τ(F) = points lying in the convex hull of F.
SubsetMap convex_closure(const RationalPointSet& pts);

/// e ∈ Shade F iff e is not a conic combination of F with at least two
/// strictly positive coefficients. Satisfies Axiom 1, not Axiom 2 in general.
SubsetMap conic_pseudo_shade(const RationalPointSet& vecs);

struct ConicWitness {
  RationalPointSet vectors;
  AxiomWitness axiom2;  // first (F, u) with u ∉ Shade F and Shade(F \ {u}) ≠ Shade F
  std::size_t candidates_tried = 0;
};

/// Deterministic search over sets of distinct nonzero integer vectors with
/// coordinates in [-2, 3], dimension 1..3 and 2..5 vectors, for a conic
/// pseudo-shade violating Axiom 2. Candidates are visited by dimension, then
/// size, then lexicographically.
std::optional<ConicWitness> find_conic_axiom2_witness(std::size_t max_candidates = 200000);

}  // namespace shadelab
