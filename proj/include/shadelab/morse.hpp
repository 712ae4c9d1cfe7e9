#pragma once

// Simplicial complexes on a ground set, complete matchings on their faces,
// acyclicity and collapsibility, and reduced homology over GF(2).

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "shadelab/graph.hpp"
#include "shadelab/subset.hpp"
#include "shadelab/subset_map.hpp"

namespace shadelab {

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Throws StructuralError if `faces` is not down-closed.
  SimplicialComplex(GroundSet ground, std::vector<Mask> faces);

  const GroundSet& ground() const { return ground_; }
  int element_count() const { return ground_.size(); }
  /// Ascending code order.
  const std::vector<Mask>& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  /// The void complex, with no faces at all (not even ∅).
  bool is_void() const { return faces_.empty(); }
  bool contains(Mask f) const { return f < member_.size() && member_[f] != 0; }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.element_count() == b.element_count() && a.faces_ == b.faces_;
  }

 private:
  GroundSet ground_;
  std::vector<Mask> faces_;
  std::vector<char> member_;
};

/// A face of `faces` with a subset missing from it, if any.
std::optional<Mask> down_closure_failure(const std::vector<Mask>& faces, int elements);

/// {F | G ⊄ m(F)}. PreconditionError unless m is an inclusion-preserving
/// shade map.
SimplicialComplex build_noninfecting_complex(const SubsetMap& m, Mask target);

struct DiscreteMatching {
  SimplicialComplex complex;
  MatchingTable pairs;
};

/// Smallest element of G \ m(F).
int elser_element(const SubsetMap& m, Mask target, Mask f);

/// μ(F) = F xor {smallest element of G \ m(F)} on the non-infecting complex.
/// UsageError when the complex is void.
DiscreteMatching build_elser_matching(const SubsetMap& m, Mask target);

struct AcyclicityVerdict {
  bool acyclic = true;
  std::vector<Mask> cycle;  // upper faces B1, ..., Bk of a closed walk
};

/// Upper faces are those B with μ(B) ≺ B; arcs B -> B' for B' ≠ B upper with
/// μ(B) ≺ B'. Acyclic iff this digraph has no directed cycle. Throws
/// PreconditionError unless the matching is complete.
AcyclicityVerdict verify_acyclic(const DiscreteMatching& d);
/// Same check for a partial matching given as (upper, lower) pairs.
AcyclicityVerdict verify_acyclic_pairs(const std::vector<std::pair<Mask, Mask>>& pairs);

enum class CertificateStatus { found, none_exists, unknown };
std::string_view to_string(CertificateStatus s);

struct CertificateResult {
  CertificateStatus status = CertificateStatus::unknown;
  std::optional<MatchingTable> matching;
  std::uint64_t nodes = 0;
  std::string_view method;  // "elser" or "search"
};

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

/// Backtracking over complete matchings, largest faces first, pruning on
/// cycles as soon as they close. `none_exists` only after an exhaustive run.
CertificateResult search_collapsibility(const SimplicialComplex& c, std::uint64_t budget = kDefaultSearchBudget);

/// The Elser matching of the non-infecting complex, verified complete and
/// acyclic.
CertificateResult elser_certificate(const SubsetMap& m, Mask target);

struct HomologyProfile {
  /// Index k holds the reduced Betti number in dimension k - 1.
  std::vector<std::int64_t> reduced_betti;
  std::int64_t euler_sum = 0;

  bool all_zero() const;
  /// Dimensions with a nonzero Betti number.
  std::vector<int> nonzero_dimensions() const;
};

/// Augmented chain complex with ∅ in dimension -1; the void complex has
/// every Betti number 0. At most 2^16 faces.
HomologyProfile gf2_reduced_homology(const SimplicialComplex& c);

/// {F | E \ F ∉ A}
SimplicialComplex alexander_dual(const SimplicialComplex& c);

/// Union over v ∈ U of the non-infecting complexes of Shade_v. U nonempty.
SimplicialComplex multi_source_complex(const Multigraph& g, const std::vector<int>& sources, Mask target,
                                       EndpointRule rule = EndpointRule::endpoints);

struct GreedyMorseResult {
  std::vector<std::pair<Mask, Mask>> pairs;     // (upper, lower)
  std::vector<std::int64_t> critical_by_dimension;  // index k is dimension k - 1
  std::size_t critical_total = 0;
  int attempts = 0;
  bool single_degree = false;
};

/// Heuristic acyclic partial matching: attempt r processes faces largest
/// first and elements in index order rotated by r, pairing greedily whenever
/// the result stays acyclic. Stops at the first attempt whose critical faces
/// share one dimension, otherwise returns the attempt with fewest critical
/// faces.
GreedyMorseResult greedy_morse_matching(const SimplicialComplex& c, int max_attempts);

}  // namespace shadelab
