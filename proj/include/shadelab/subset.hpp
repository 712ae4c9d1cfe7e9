#pragma once

// Ground sets, bit-encoded subsets, Boolean intervals and complete matchings.
//
// Element i of a ground set is bit i of a subset code. The total order on the
// ground set used by every "smallest element" rule in this library is
// ascending index order, so the smallest element of a mask is its lowest set
// bit.

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shadelab {

using Mask = std::uint32_t;

/// Dense tables hold one entry per subset code; 2^20 entries is the cap.
inline constexpr int kMaxDenseElements = 20;

/// Sentinel for "no entry" in dense code-indexed tables.
inline constexpr Mask kNoMask = ~Mask{0};

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
constexpr int cardinality(Mask m) { return std::popcount(m); }
constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr int lowest_element(Mask m) { return std::countr_zero(m); }

/// (-1)^{|m|}
constexpr int sign_of(Mask m) { return (std::popcount(m) & 1) ? -1 : 1; }

/// A ≺ B: B is A plus exactly one element.
constexpr bool covers_mask(Mask a, Mask b) {
  return is_subset(a, b) && std::popcount(b & ~a) == 1;
}

/// Calls fn(s) for every submask s of `m` in ascending numeric order.
template <class Fn>
void for_each_submask_ascending(Mask m, Fn&& fn) {
  Mask s = 0;
  while (true) {
    fn(s);
    if (s == m) break;
    s = (s - m) & m;
  }
}

class Subset;

class GroundSet {
 public:
  GroundSet() = default;
  /// Elements labelled "1", "2", ..., matching the usual 1-based notation.
  explicit GroundSet(int size);
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  Mask full() const { return full_mask(size()); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;

  /// Throws UsageError when the ground set is too large for a dense table.
  void require_dense() const;
  /// 2^size, only meaningful for dense-capable ground sets.
  std::size_t power_set_size() const { return std::size_t{1} << size(); }

  Subset subset(Mask code) const;
  Subset empty_subset() const;
  Subset everything() const;
  /// Parses a comma-separated list of labels ("1,3", "", "{1,3}").
  Subset parse(std::string_view text) const;
  /// `{1,3}` with elements in ascending index order; `{}` for the empty set.
  std::string format(Mask code) const;
  std::string format(const Subset& s) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A subset of a ground set of `width` elements.
class Subset {
 public:
  Subset() = default;
  Subset(Mask code, int width);

  Mask code() const { return code_; }
  int width() const { return width_; }
  int size() const { return cardinality(code_); }
  bool empty() const { return code_ == 0; }
  bool contains(int element) const { return element >= 0 && element < width_ && (code_ & bit(element)); }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset& a, const Subset& b) { return a.code_ <=> b.code_; }

 private:
  Mask code_ = 0;
  int width_ = 0;
};

/// Throws UsageError unless both subsets live over ground sets of equal size.
void require_same_universe(const Subset& a, const Subset& b);

/// A ≺ B. Throws UsageError on mismatched ground sets.
bool covers(const Subset& a, const Subset& b);

/// [U,V] = {I | U ⊆ I ⊆ V}.
class BooleanInterval {
 public:
  BooleanInterval(Subset lower, Subset upper);

  const Subset& lower() const { return lower_; }
  const Subset& upper() const { return upper_; }
  bool contains(Mask code) const { return is_subset(lower_.code(), code) && is_subset(code, upper_.code()); }
  bool contains(const Subset& s) const { return s.width() == lower_.width() && contains(s.code()); }
  /// 2^{|V \ U|}
  std::uint64_t member_count() const { return std::uint64_t{1} << cardinality(upper_.code() & ~lower_.code()); }

  friend bool operator==(const BooleanInterval&, const BooleanInterval&) = default;

 private:
  Subset lower_;
  Subset upper_;
};

/// Members of [U,V] in ascending code order. Throws UsageError if U ⊄ V.
std::vector<Subset> interval_members(const Subset& lower, const Subset& upper);

/// Σ (-1)^{|F|} over the family.
std::int64_t alternating_sum(std::span<const Mask> family);
std::int64_t alternating_sum(std::span<const Subset> family);

/// A self-map on a family of subsets, intended to be a complete matching.
class MatchingTable {
 public:
  MatchingTable() = default;
  /// `partner[i]` is the image of `family[i]`. Family codes must be distinct.
  MatchingTable(int width, std::vector<Mask> family, std::vector<Mask> partner);

  int width() const { return width_; }
  std::span<const Mask> family() const { return family_; }
  std::span<const Mask> partners() const { return partner_; }
  std::size_t size() const { return family_.size(); }
  bool in_family(Mask code) const;
  /// Image of `code`; throws UsageError when `code` is outside the family.
  Mask partner(Mask code) const;

 private:
  int width_ = 0;
  std::vector<Mask> family_;
  std::vector<Mask> partner_;
  std::vector<std::int32_t> slot_;  // code -> index into family_, -1 if absent
};

struct MatchingReport {
  std::vector<Mask> involution_failures;  // F with pair(pair(F)) != F
  std::vector<Mask> covering_failures;    // neither pair(F) ≺ F nor F ≺ pair(F)
  std::vector<Mask> fixed_points;         // pair(F) == F
  std::int64_t alternating_sum = 0;

  bool complete() const {
    return involution_failures.empty() && covering_failures.empty() && fixed_points.empty();
  }
};

/// Checks involution, the covering relation and fixed points over the whole
/// family. Throws StructuralError when the pairing leaves the family. A
/// complete matching with a nonzero alternating sum is an InternalError.
MatchingReport verify_complete_matching(const MatchingTable& matching);

}  // namespace shadelab
