#include "shadelab/interval_partition.hpp"

#include <algorithm>

#include "shadelab/error.hpp"
#include "shadelab/report.hpp"
#include "shadelab/shade_map.hpp"

namespace shadelab {

IntervalPartition::IntervalPartition(int elements, std::vector<IntervalBlock> blocks)
    : elements_(elements), blocks_(std::move(blocks)) {
  if (elements < 0 || elements > kMaxDenseElements) throw UsageError("partition ground set too large");
  std::sort(blocks_.begin(), blocks_.end());
}

PartitionReport validate_partition(const IntervalPartition& p) {
  PartitionReport r;
  const Mask full = full_mask(p.elements());
  const std::size_t codes = std::size_t{1} << p.elements();
  std::vector<char> seen(codes, 0);
  for (const auto& b : p.blocks()) {
    if (!is_subset(b.lower, b.upper) || !is_subset(b.upper, full)) {
      r.valid = false;
      if (!r.malformed) r.malformed = b;
      continue;
    }
    r.member_total += std::uint64_t{1} << cardinality(b.upper & ~b.lower);
    for_each_submask_ascending(b.upper & ~b.lower, [&](Mask free) {
      auto& slot = seen[b.lower | free];
      if (slot && (!r.doubly_covered || (b.lower | free) < *r.doubly_covered)) r.doubly_covered = b.lower | free;
      slot = 1;
    });
  }
  for (Mask f = 0; f < codes; ++f) {
    if (!seen[f]) {
      r.uncovered = f;
      break;
    }
  }
  if (r.doubly_covered || r.uncovered) r.valid = false;
  return r;
}

std::vector<std::uint32_t> block_index(const IntervalPartition& p) {
  std::vector<std::uint32_t> index(std::size_t{1} << p.elements(), 0);
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    const auto& b = p.blocks()[i];
    for_each_submask_ascending(b.upper & ~b.lower,
                               [&](Mask free) { index[b.lower | free] = static_cast<std::uint32_t>(i); });
  }
  return index;
}

SubsetMap shade_from_partition(const IntervalPartition& p, const GroundSet& ground) {
  if (ground.size() != p.elements()) throw UsageError("ground set does not match the partition");
  const auto r = validate_partition(p);
  if (!r.valid) throw PreconditionError("not a Boolean interval partition", to_json(r, ground));
  const auto index = block_index(p);
  const Mask full = ground.full();
  return SubsetMap::tabulate(ground, [&](Mask f) {
    const auto& b = p.blocks()[index[f]];
    return full & ~(b.upper & ~b.lower);
  });
}

SubsetMap shade_from_partition(const IntervalPartition& p) { return shade_from_partition(p, GroundSet(p.elements())); }

IntervalPartition partition_from_shade(const SubsetMap& m) {
  const auto d = classify_map(m);
  if (!d.is_shade_map()) throw PreconditionError("map is not a shade map", to_json(d, m.ground()));
  const Mask full = m.full();
  std::vector<IntervalBlock> blocks;
  for (Mask f = 0; f < m.table().size(); ++f) {
    const IntervalBlock b{f & m(f), f | (full & ~m(f))};
    // Each block is reported once, by its lower end.
    if (b.lower == f) blocks.push_back(b);
  }
  IntervalPartition p(m.element_count(), std::move(blocks));
  if (!validate_partition(p).valid) throw InternalError("shade map produced an invalid interval partition");
  return p;
}

namespace {

struct PartitionSearch {
  int n;
  Mask full;
  std::vector<char> covered;
  std::vector<IntervalBlock> blocks;
  const std::function<void(const IntervalPartition&)>& visit;
  std::uint64_t count = 0;

  bool interval_free(Mask lower, Mask upper) const {
    bool free = true;
    for_each_submask_ascending(upper & ~lower, [&](Mask s) {
      if (covered[lower | s]) free = false;
    });
    return free;
  }

  void mark(Mask lower, Mask upper, char value) {
    for_each_submask_ascending(upper & ~lower, [&](Mask s) { covered[lower | s] = value; });
  }

  void run(Mask from) {
    Mask u = from;
    while (u < covered.size() && covered[u]) ++u;
    if (u == covered.size()) {
      ++count;
      if (visit) visit(IntervalPartition(n, blocks));
      return;
    }
    for_each_submask_ascending(full & ~u, [&](Mask extra) {
      const Mask v = u | extra;
      if (!interval_free(u, v)) return;
      mark(u, v, 1);
      blocks.push_back({u, v});
      run(u + 1);
      blocks.pop_back();
      mark(u, v, 0);
    });
  }
};

}  // namespace

std::uint64_t enumerate_partitions(int n, const std::function<void(const IntervalPartition&)>& visit) {
  if (n < 0 || n > 4) throw UsageError("partition enumeration is limited to 4 elements");
  PartitionSearch search{n, full_mask(n), std::vector<char>(std::size_t{1} << n, 0), {}, visit};
  search.run(0);
  return search.count;
}

std::uint64_t interval_count(int n) {
  if (n < 0 || n > 40) throw UsageError("interval count supports 0 <= n <= 40");
  std::uint64_t out = 1;
  for (int i = 0; i < n; ++i) out *= 3;
  return out;
}

}  // namespace shadelab
