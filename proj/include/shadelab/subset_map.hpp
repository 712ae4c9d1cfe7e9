#pragma once

#include <span>
#include <vector>

#include "shadelab/subset.hpp"

namespace shadelab {

/// A total map P(E) -> P(E) stored densely, one entry per subset code.
class SubsetMap {
 public:
  SubsetMap() = default;
  SubsetMap(GroundSet ground, std::vector<Mask> table);

  template <class Fn>
  static SubsetMap tabulate(GroundSet ground, Fn&& fn) {
    ground.require_dense();
    std::vector<Mask> table(ground.power_set_size());
    for (Mask f = 0; f < table.size(); ++f) table[f] = fn(f);
    return SubsetMap(std::move(ground), std::move(table));
  }

  const GroundSet& ground() const { return ground_; }
  int element_count() const { return ground_.size(); }
  Mask full() const { return ground_.full(); }

  Mask operator()(Mask f) const { return table_[f]; }
  Subset at(const Subset& f) const;
  std::span<const Mask> table() const { return table_; }

  /// Table equality; labels are presentation only.
  friend bool operator==(const SubsetMap& a, const SubsetMap& b) {
    return a.element_count() == b.element_count() && a.table_ == b.table_;
  }

 private:
  GroundSet ground_;
  std::vector<Mask> table_;
};

}  // namespace shadelab
