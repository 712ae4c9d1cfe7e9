#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shadelab/subset.hpp"

namespace shadelab {

class Poset;
std::vector<Poset> all_posets(int n);

/// A finite strict partial order, stored as per-element masks of the
/// elements strictly below and strictly above.
class Poset {
 public:
  Poset() = default;

  /// Builds the transitive closure of `less_pairs` (a, b) meaning a < b.
  /// Throws UsageError if the closure is not irreflexive.
  static Poset from_relations(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& less_pairs);
  static Poset chain(int n);
  static Poset antichain(int n);

  int size() const { return static_cast<int>(below_.size()); }
  bool less(int a, int b) const { return (below_[static_cast<std::size_t>(b)] & bit(a)) != 0; }
  Mask strictly_below(int e) const { return below_[static_cast<std::size_t>(e)]; }
  Mask strictly_above(int e) const { return above_[static_cast<std::size_t>(e)]; }
  const GroundSet& ground() const { return ground_; }

  /// {e | e < f for some f ∈ F}
  Mask strict_downset(Mask f) const;
  /// {e | e ≤ f for some f ∈ F}
  Mask downset(Mask f) const { return f | strict_downset(f); }
  /// {e | g ≤ e for some g ∈ F}
  Mask upset(Mask f) const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.below_ == b.below_; }

 private:
  friend std::vector<Poset> all_posets(int n);

  GroundSet ground_;
  std::vector<Mask> below_;
  std::vector<Mask> above_;
};

/// Every labelled strict partial order on n ≤ 5 elements.
std::vector<Poset> all_posets(int n);

}  // namespace shadelab
