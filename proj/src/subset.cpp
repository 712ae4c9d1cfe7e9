#include "shadelab/subset.hpp"

#include <algorithm>
#include <sstream>

#include "shadelab/error.hpp"

namespace shadelab {

GroundSet::GroundSet(int size) {
  if (size < 0) throw UsageError("ground set size must be nonnegative");
  labels_.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) labels_.push_back(std::to_string(i + 1));
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > 32) throw UsageError("ground sets are limited to 32 elements");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (std::find(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(i), labels_[i]) !=
        labels_.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw UsageError("duplicate element label '" + labels_[i] + "'");
    }
  }
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

void GroundSet::require_dense() const {
  if (size() > kMaxDenseElements) {
    throw UsageError("ground set has " + std::to_string(size()) + " elements; dense tables allow at most " +
                     std::to_string(kMaxDenseElements));
  }
}

Subset GroundSet::subset(Mask code) const { return Subset(code, size()); }
Subset GroundSet::empty_subset() const { return Subset(0, size()); }
Subset GroundSet::everything() const { return Subset(full(), size()); }

Subset GroundSet::parse(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw UsageError("unbalanced braces in subset '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
  }
  Mask code = 0;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    if (token.empty()) throw UsageError("empty element name in subset list");
    auto index = index_of(token);
    if (!index) throw UsageError("unknown element '" + std::string(token) + "'");
    code |= bit(*index);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (trim(text).empty()) throw UsageError("trailing comma in subset list");
  }
  return Subset(code, size());
}

std::string GroundSet::format(Mask code) const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (!(code & bit(i))) continue;
    if (!first) out << ',';
    out << labels_[static_cast<std::size_t>(i)];
    first = false;
  }
  out << '}';
  return out.str();
}

std::string GroundSet::format(const Subset& s) const {
  if (s.width() != size()) throw UsageError("subset does not belong to this ground set");
  return format(s.code());
}

Subset::Subset(Mask code, int width) : code_(code), width_(width) {
  if (width < 0 || width > 32) throw UsageError("subset width out of range");
  if (width < 32 && code > full_mask(width)) {
    throw UsageError("subset code " + std::to_string(code) + " exceeds a ground set of " + std::to_string(width) +
                     " elements");
  }
}

void require_same_universe(const Subset& a, const Subset& b) {
  if (a.width() != b.width()) {
    throw UsageError("subsets belong to different ground sets (" + std::to_string(a.width()) + " vs " +
                     std::to_string(b.width()) + " elements)");
  }
}

bool covers(const Subset& a, const Subset& b) {
  require_same_universe(a, b);
  return covers_mask(a.code(), b.code());
}

BooleanInterval::BooleanInterval(Subset lower, Subset upper) : lower_(lower), upper_(upper) {
  require_same_universe(lower_, upper_);
  if (!is_subset(lower_.code(), upper_.code())) {
    throw UsageError("interval lower bound is not contained in its upper bound");
  }
}

std::vector<Subset> interval_members(const Subset& lower, const Subset& upper) {
  BooleanInterval interval(lower, upper);
  std::vector<Subset> out;
  out.reserve(interval.member_count());
  const Mask free = upper.code() & ~lower.code();
  for_each_submask_ascending(free, [&](Mask s) { out.emplace_back(lower.code() | s, lower.width()); });
  return out;
}

std::int64_t alternating_sum(std::span<const Mask> family) {
  std::int64_t sum = 0;
  for (Mask f : family) sum += sign_of(f);
  return sum;
}

std::int64_t alternating_sum(std::span<const Subset> family) {
  std::int64_t sum = 0;
  for (const auto& f : family) sum += sign_of(f.code());
  return sum;
}

MatchingTable::MatchingTable(int width, std::vector<Mask> family, std::vector<Mask> partner)
    : width_(width), family_(std::move(family)), partner_(std::move(partner)) {
  if (width_ < 0 || width_ > kMaxDenseElements) throw UsageError("matching width out of range");
  if (family_.size() != partner_.size()) throw UsageError("matching needs exactly one partner per family member");
  slot_.assign(std::size_t{1} << width_, -1);
  for (std::size_t i = 0; i < family_.size(); ++i) {
    const Mask f = family_[i];
    if (f > full_mask(width_)) throw UsageError("family member outside the ground set");
    if (slot_[f] != -1) throw UsageError("family lists " + std::to_string(f) + " twice");
    slot_[f] = static_cast<std::int32_t>(i);
  }
}

bool MatchingTable::in_family(Mask code) const { return code < slot_.size() && slot_[code] != -1; }

Mask MatchingTable::partner(Mask code) const {
  if (!in_family(code)) throw UsageError("code " + std::to_string(code) + " is not in the matched family");
  return partner_[static_cast<std::size_t>(slot_[code])];
}

MatchingReport verify_complete_matching(const MatchingTable& matching) {
  MatchingReport report;
  const auto family = matching.family();
  const auto partners = matching.partners();
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!matching.in_family(partners[i])) {
      throw StructuralError("pairing sends " + std::to_string(family[i]) + " to " + std::to_string(partners[i]) +
                            ", which is outside the family");
    }
  }
  std::vector<Mask> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  for (Mask f : sorted) {
    const Mask g = matching.partner(f);
    if (g == f) report.fixed_points.push_back(f);
    if (matching.partner(g) != f) report.involution_failures.push_back(f);
    if (!covers_mask(f, g) && !covers_mask(g, f)) report.covering_failures.push_back(f);
  }
  report.alternating_sum = alternating_sum(family);
  if (report.complete() && report.alternating_sum != 0) {
    throw InternalError("complete matching over a family with nonzero alternating sum");
  }
  return report;
}

}  // namespace shadelab
