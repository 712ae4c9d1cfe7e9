#include "shadelab/poset.hpp"

#include "shadelab/error.hpp"

namespace shadelab {

namespace {

std::vector<Mask> above_from_below(const std::vector<Mask>& below) {
  std::vector<Mask> above(below.size(), 0);
  for (std::size_t b = 0; b < below.size(); ++b) {
    for (std::size_t a = 0; a < below.size(); ++a) {
      if (below[b] & bit(static_cast<int>(a))) above[a] |= bit(static_cast<int>(b));
    }
  }
  return above;
}

bool is_strict_order(const std::vector<Mask>& below) {
  for (std::size_t b = 0; b < below.size(); ++b) {
    if (below[b] & bit(static_cast<int>(b))) return false;
    for (Mask rest = below[b]; rest; rest &= rest - 1) {
      if (!is_subset(below[static_cast<std::size_t>(lowest_element(rest))], below[b])) return false;
    }
  }
  return true;
}

}  // namespace

Poset Poset::from_relations(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& less_pairs) {
  Poset p;
  p.ground_ = GroundSet(std::move(labels));
  p.ground_.require_dense();
  const auto n = static_cast<std::size_t>(p.ground_.size());
  p.below_.assign(n, 0);
  for (auto [a, b] : less_pairs) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw UsageError("relation refers to an element outside the poset");
    }
    p.below_[static_cast<std::size_t>(b)] |= bit(a);
  }
  // Transitive closure by fixpoint iteration.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t b = 0; b < n; ++b) {
      Mask closed = p.below_[b];
      for (Mask rest = p.below_[b]; rest; rest &= rest - 1) {
        closed |= p.below_[static_cast<std::size_t>(lowest_element(rest))];
      }
      if (closed != p.below_[b]) {
        p.below_[b] = closed;
        changed = true;
      }
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (p.below_[e] & bit(static_cast<int>(e))) {
      throw UsageError("relations contain a cycle through '" + p.ground_.label(static_cast<int>(e)) + "'");
    }
  }
  p.above_ = above_from_below(p.below_);
  return p;
}

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return from_relations(GroundSet(n).labels(), pairs);
}

Poset Poset::antichain(int n) { return from_relations(GroundSet(n).labels(), {}); }

Mask Poset::strict_downset(Mask f) const {
  Mask out = 0;
  for (Mask rest = f; rest; rest &= rest - 1) out |= below_[static_cast<std::size_t>(lowest_element(rest))];
  return out;
}

Mask Poset::upset(Mask f) const {
  Mask out = f;
  for (Mask rest = f; rest; rest &= rest - 1) out |= above_[static_cast<std::size_t>(lowest_element(rest))];
  return out;
}

std::vector<Poset> all_posets(int n) {
  if (n < 0 || n > 5) throw UsageError("poset enumeration is limited to 5 elements");
  std::vector<Poset> out;
  const auto count = static_cast<std::size_t>(n);
  std::vector<Mask> below(count, 0);
  const GroundSet ground(n);
  // Odometer over below[b] ⊆ E \ {b} for every b.
  auto next = [&]() {
    for (std::size_t b = 0; b < count; ++b) {
      const Mask allowed = full_mask(n) & ~bit(static_cast<int>(b));
      below[b] = (below[b] - allowed) & allowed;
      if (below[b] != 0) return true;
    }
    return false;
  };
  do {
    if (is_strict_order(below)) {
      Poset p;
      p.ground_ = ground;
      p.below_ = below;
      p.above_ = above_from_below(below);
      out.push_back(std::move(p));
    }
  } while (next());
  return out;
}

}  // namespace shadelab
