#pragma once

// Partitions of P(E) into Boolean intervals and their correspondence with
// shade maps: the block [α(F), τ(F)] containing F gives
//   Shade F = E \ (τ(F) \ α(F)),
// and conversely α(F) = F ∩ Shade F, τ(F) = F ∪ (E \ Shade F).

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "shadelab/subset_map.hpp"

namespace shadelab {

struct IntervalBlock {
  Mask lower = 0;
  Mask upper = 0;

  friend bool operator==(const IntervalBlock&, const IntervalBlock&) = default;
  friend auto operator<=>(const IntervalBlock&, const IntervalBlock&) = default;
};

class IntervalPartition {
 public:
  IntervalPartition() = default;
  /// Blocks are stored sorted by lower code; validity is not checked here.
  IntervalPartition(int elements, std::vector<IntervalBlock> blocks);

  int elements() const { return elements_; }
  const std::vector<IntervalBlock>& blocks() const { return blocks_; }

  friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;

 private:
  int elements_ = 0;
  std::vector<IntervalBlock> blocks_;
};

struct PartitionReport {
  bool valid = true;
  std::optional<IntervalBlock> malformed;  // lower ⊄ upper or outside E
  std::optional<Mask> doubly_covered;      // first code lying in two blocks
  std::optional<Mask> uncovered;           // first code lying in no block
  std::uint64_t member_total = 0;          // Σ 2^{|V \ U|}
};

PartitionReport validate_partition(const IntervalPartition& p);

/// Code -> index of its block. Requires a valid partition.
std::vector<std::uint32_t> block_index(const IntervalPartition& p);

/// PreconditionError with the validation report if p is invalid.
SubsetMap shade_from_partition(const IntervalPartition& p, const GroundSet& ground);
SubsetMap shade_from_partition(const IntervalPartition& p);

/// PreconditionError with axiom witnesses unless m is a shade map.
IntervalPartition partition_from_shade(const SubsetMap& m);

/// Calls visit(p) for every interval partition of P({0..n-1}), n ≤ 4, and
/// returns how many there were. The smallest uncovered code starts each new
/// block, whose upper end runs over every superset with an uncovered interval.
std::uint64_t enumerate_partitions(int n, const std::function<void(const IntervalPartition&)>& visit = {});

/// 3^n.
std::uint64_t interval_count(int n);

}  // namespace shadelab
