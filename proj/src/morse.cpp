#include "shadelab/morse.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "shadelab/error.hpp"
#include "shadelab/report.hpp"
#include "shadelab/shade_map.hpp"

namespace shadelab {

std::optional<Mask> down_closure_failure(const std::vector<Mask>& faces, int elements) {
  std::vector<char> member(std::size_t{1} << elements, 0);
  for (Mask f : faces) member[f] = 1;
  for (Mask f : faces) {
    for (Mask rest = f; rest; rest &= rest - 1) {
      if (!member[f & ~(rest & (~rest + 1))]) return f;
    }
  }
  return std::nullopt;
}

SimplicialComplex::SimplicialComplex(GroundSet ground, std::vector<Mask> faces)
    : ground_(std::move(ground)), faces_(std::move(faces)) {
  ground_.require_dense();
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  const Mask full = ground_.full();
  for (Mask f : faces_) {
    if (!is_subset(f, full)) throw StructuralError("face " + std::to_string(f) + " is outside the ground set");
  }
  if (auto bad = down_closure_failure(faces_, ground_.size())) {
    throw StructuralError("family is not down-closed: face " + ground_.format(*bad) + " has a missing subset");
  }
  member_.assign(ground_.power_set_size(), 0);
  for (Mask f : faces_) member_[f] = 1;
}

SimplicialComplex build_noninfecting_complex(const SubsetMap& m, Mask target) {
  if (!is_subset(target, m.full())) throw UsageError("target set is not a subset of the ground set");
  const auto d = classify_map(m);
  if (!d.is_shade_map() || !d.inclusion_preserving()) {
    throw PreconditionError("the non-infecting family is only a complex for inclusion-preserving shade maps",
                            to_json(d, m.ground()));
  }
  std::vector<Mask> faces;
  for (Mask f = 0; f < m.table().size(); ++f) {
    if (!is_subset(target, m(f))) faces.push_back(f);
  }
  return SimplicialComplex(m.ground(), std::move(faces));
}

int elser_element(const SubsetMap& m, Mask target, Mask f) {
  const Mask missing = target & ~m(f);
  if (!missing) throw UsageError("F infects all of G, so it is not a face");
  return lowest_element(missing);
}

DiscreteMatching build_elser_matching(const SubsetMap& m, Mask target) {
  auto complex = build_noninfecting_complex(m, target);
  if (complex.is_void()) throw UsageError("nothing to match: the non-infecting complex is void");
  std::vector<Mask> partner;
  for (Mask f : complex.faces()) partner.push_back(f ^ bit(elser_element(m, target, f)));
  // A partner outside the complex is reported by verify_complete_matching.
  MatchingTable table(complex.element_count(), complex.faces(), std::move(partner));
  return {std::move(complex), std::move(table)};
}

namespace {

// Upper-face digraph of a (partial) matching, searched for a directed cycle.
class UpperDigraph {
 public:
  explicit UpperDigraph(const std::vector<std::pair<Mask, Mask>>& pairs) {
    for (auto [upper, lower] : pairs) lower_of_[upper] = lower;
  }

  AcyclicityVerdict find_cycle() const {
    std::unordered_map<Mask, int> colour;  // 0 new, 1 on stack, 2 done
    std::vector<Mask> uppers;
    for (const auto& kv : lower_of_) uppers.push_back(kv.first);
    std::sort(uppers.begin(), uppers.end());
    for (Mask start : uppers) {
      if (colour[start] != 0) continue;
      // Iterative DFS keeping the path for witness extraction.
      std::vector<std::pair<Mask, std::vector<Mask>>> stack;
      stack.push_back({start, successors(start)});
      colour[start] = 1;
      while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next.empty()) {
          colour[node] = 2;
          stack.pop_back();
          continue;
        }
        const Mask to = next.back();
        next.pop_back();
        const int c = colour[to];
        if (c == 1) {
          AcyclicityVerdict v{false, {}};
          auto it = std::find_if(stack.begin(), stack.end(), [&](const auto& frame) { return frame.first == to; });
          for (; it != stack.end(); ++it) v.cycle.push_back(it->first);
          return v;
        }
        if (c == 0) {
          colour[to] = 1;
          stack.push_back({to, successors(to)});
        }
      }
    }
    return {};
  }

 private:
  std::vector<Mask> successors(Mask b) const {
    std::vector<Mask> out;
    const Mask low = lower_of_.at(b);
    for (int x = 0; x < 32; ++x) {
      const Mask cand = low | bit(x);
      if (cand == low || cand == b) continue;
      if (lower_of_.count(cand)) out.push_back(cand);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::unordered_map<Mask, Mask> lower_of_;
};

// Dense matching state used by the searches; cycles can only appear among
// upper faces of one size, and only through the pair added last.
class MatchingState {
 public:
  explicit MatchingState(const SimplicialComplex& c)
      : complex_(c), partner_(c.ground().power_set_size(), kNoMask), n_(c.element_count()) {}

  bool matched(Mask f) const { return partner_[f] != kNoMask; }
  Mask partner(Mask f) const { return partner_[f]; }

  void pair(Mask upper, Mask lower) {
    partner_[upper] = lower;
    partner_[lower] = upper;
  }
  void unpair(Mask upper, Mask lower) {
    partner_[upper] = kNoMask;
    partner_[lower] = kNoMask;
  }

  bool is_upper(Mask b) const { return matched(b) && is_subset(partner_[b], b) && partner_[b] != b; }

  /// Whether the freshly added upper face `start` lies on a cycle.
  bool closes_cycle(Mask start) {
    seen_.clear();
    std::vector<Mask> stack{start};
    while (!stack.empty()) {
      const Mask b = stack.back();
      stack.pop_back();
      const Mask low = partner_[b];
      for (int x = 0; x < n_; ++x) {
        const Mask cand = low | bit(x);
        if (cand == low || cand == b || !complex_.contains(cand) || !is_upper(cand)) continue;
        if (cand == start) return true;
        if (seen_.insert(cand).second) stack.push_back(cand);
      }
    }
    return false;
  }

 private:
  const SimplicialComplex& complex_;
  std::vector<Mask> partner_;
  int n_;
  std::unordered_set<Mask> seen_;
};

std::vector<Mask> largest_first(const SimplicialComplex& c) {
  std::vector<Mask> order = c.faces();
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) { return cardinality(a) > cardinality(b); });
  return order;
}

struct Backtracker {
  const SimplicialComplex& complex;
  std::vector<Mask> order;
  MatchingState state;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted_budget = false;

  bool run(std::size_t i) {
    while (i < order.size() && state.matched(order[i])) ++i;
    if (i == order.size()) return true;
    const Mask f = order[i];
    for (Mask rest = f; rest; rest &= rest - 1) {
      const Mask low = f & ~(rest & (~rest + 1));
      if (!complex.contains(low) || state.matched(low)) continue;
      if (++nodes > budget) {
        exhausted_budget = true;
        return false;
      }
      state.pair(f, low);
      if (!state.closes_cycle(f) && run(i + 1)) return true;
      state.unpair(f, low);
      if (exhausted_budget) return false;
    }
    return false;
  }
};

MatchingTable table_from_state(const SimplicialComplex& c, const MatchingState& s) {
  std::vector<Mask> partner;
  for (Mask f : c.faces()) partner.push_back(s.partner(f));
  return MatchingTable(c.element_count(), c.faces(), std::move(partner));
}

std::vector<std::pair<Mask, Mask>> upper_pairs(const MatchingTable& t) {
  std::vector<std::pair<Mask, Mask>> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Mask f = t.family()[i];
    const Mask p = t.partners()[i];
    if (covers_mask(p, f)) out.emplace_back(f, p);
  }
  return out;
}

}  // namespace

AcyclicityVerdict verify_acyclic_pairs(const std::vector<std::pair<Mask, Mask>>& pairs) {
  return UpperDigraph(pairs).find_cycle();
}

AcyclicityVerdict verify_acyclic(const DiscreteMatching& d) {
  const auto report = verify_complete_matching(d.pairs);
  if (!report.complete()) {
    throw PreconditionError("acyclicity is only defined here for complete matchings", to_json(report));
  }
  return verify_acyclic_pairs(upper_pairs(d.pairs));
}

std::string_view to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::found: return "found";
    case CertificateStatus::none_exists: return "none_exists";
    case CertificateStatus::unknown: return "unknown";
  }
  return "unknown";
}

CertificateResult search_collapsibility(const SimplicialComplex& c, std::uint64_t budget) {
  CertificateResult result;
  result.method = "search";
  std::int64_t euler = 0;
  for (Mask f : c.faces()) euler += sign_of(f);
  // A complete matching pairs faces of opposite parity.
  if (euler != 0) {
    result.status = CertificateStatus::none_exists;
    return result;
  }
  Backtracker bt{c, largest_first(c), MatchingState(c), budget};
  const bool ok = bt.run(0);
  result.nodes = bt.nodes;
  if (ok) {
    result.status = CertificateStatus::found;
    result.matching = table_from_state(c, bt.state);
    if (!verify_acyclic_pairs(upper_pairs(*result.matching)).acyclic) {
      throw InternalError("collapsibility search returned a matching with a cycle");
    }
  } else {
    result.status = bt.exhausted_budget ? CertificateStatus::unknown : CertificateStatus::none_exists;
  }
  return result;
}

CertificateResult elser_certificate(const SubsetMap& m, Mask target) {
  CertificateResult result;
  result.method = "elser";
  auto d = build_elser_matching(m, target);
  if (!verify_complete_matching(d.pairs).complete() || !verify_acyclic(d).acyclic) {
    throw InternalError("Elser matching is not an acyclic complete matching");
  }
  result.status = CertificateStatus::found;
  result.matching = std::move(d.pairs);
  return result;
}

bool HomologyProfile::all_zero() const {
  return std::all_of(reduced_betti.begin(), reduced_betti.end(), [](std::int64_t b) { return b == 0; });
}

std::vector<int> HomologyProfile::nonzero_dimensions() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < reduced_betti.size(); ++k) {
    if (reduced_betti[k] != 0) out.push_back(static_cast<int>(k) - 1);
  }
  return out;
}

namespace {

using Column = std::vector<std::uint32_t>;

void add_column(Column& target, const Column& other) {
  Column out;
  out.reserve(target.size() + other.size());
  std::set_symmetric_difference(target.begin(), target.end(), other.begin(), other.end(), std::back_inserter(out));
  target.swap(out);
}

}  // namespace

HomologyProfile gf2_reduced_homology(const SimplicialComplex& c) {
  if (c.face_count() > (std::size_t{1} << 16)) throw UsageError("homology is limited to 65536 faces");
  HomologyProfile h;
  const int n = c.element_count();
  if (c.is_void()) {
    h.reduced_betti.assign(1, 0);
    return h;
  }
  // Faces grouped by size; position of each face within its size class.
  std::vector<std::vector<Mask>> by_size(static_cast<std::size_t>(n) + 1);
  std::vector<std::uint32_t> position(c.ground().power_set_size(), 0);
  for (Mask f : c.faces()) {
    auto& layer = by_size[static_cast<std::size_t>(cardinality(f))];
    position[f] = static_cast<std::uint32_t>(layer.size());
    layer.push_back(f);
    h.euler_sum += sign_of(f);
  }
  int top = n;
  while (top > 0 && by_size[static_cast<std::size_t>(top)].empty()) --top;

  // rank[s] is the rank of the boundary from size s to size s - 1.
  std::vector<std::int64_t> rank(static_cast<std::size_t>(top) + 2, 0);
  std::vector<char> cleared;  // columns of the next lower size known to be cycles
  std::vector<char> pivot_rows;
  for (int s = top; s >= 1; --s) {
    const auto& cols = by_size[static_cast<std::size_t>(s)];
    const auto& rows = by_size[static_cast<std::size_t>(s - 1)];
    std::vector<std::int64_t> pivot_owner(rows.size(), -1);
    std::vector<Column> reduced(cols.size());
    pivot_rows.assign(rows.size(), 0);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!cleared.empty() && cleared[j]) continue;
      Column col;
      for (Mask rest = cols[j]; rest; rest &= rest - 1) {
        col.push_back(position[cols[j] & ~(rest & (~rest + 1))]);
      }
      std::sort(col.begin(), col.end());
      while (!col.empty() && pivot_owner[col.back()] >= 0) {
        add_column(col, reduced[static_cast<std::size_t>(pivot_owner[col.back()])]);
      }
      if (!col.empty()) {
        pivot_owner[col.back()] = static_cast<std::int64_t>(j);
        pivot_rows[col.back()] = 1;
        ++rank[static_cast<std::size_t>(s)];
        reduced[j] = std::move(col);
      }
    }
    cleared = pivot_rows;
  }
  for (int s = 0; s <= top; ++s) {
    const auto f = static_cast<std::int64_t>(by_size[static_cast<std::size_t>(s)].size());
    h.reduced_betti.push_back(f - rank[static_cast<std::size_t>(s)] - rank[static_cast<std::size_t>(s) + 1]);
  }
  std::int64_t check = 0;
  for (std::size_t k = 0; k < h.reduced_betti.size(); ++k) check += (k % 2 == 0 ? 1 : -1) * h.reduced_betti[k];
  if (check != h.euler_sum) throw InternalError("Euler characteristic does not match the Betti numbers");
  return h;
}

SimplicialComplex alexander_dual(const SimplicialComplex& c) {
  const Mask full = c.ground().full();
  std::vector<Mask> faces;
  for (Mask f = 0; f < c.ground().power_set_size(); ++f) {
    if (!c.contains(full & ~f)) faces.push_back(f);
  }
  return SimplicialComplex(c.ground(), std::move(faces));
}

SimplicialComplex multi_source_complex(const Multigraph& g, const std::vector<int>& sources, Mask target,
                                       EndpointRule rule) {
  if (sources.empty()) throw UsageError("the source set U must be nonempty");
  std::vector<Mask> faces;
  GroundSet ground = g.edge_ground();
  for (int v : sources) {
    const auto part = build_noninfecting_complex(edge_shade_map(g, v, rule), target);
    faces.insert(faces.end(), part.faces().begin(), part.faces().end());
  }
  return SimplicialComplex(std::move(ground), std::move(faces));
}

GreedyMorseResult greedy_morse_matching(const SimplicialComplex& c, int max_attempts) {
  const int n = c.element_count();
  GreedyMorseResult best;
  bool have_best = false;
  const auto order = largest_first(c);
  const int attempts = std::max(1, max_attempts);
  for (int r = 0; r < attempts; ++r) {
    MatchingState state(c);
    std::vector<std::pair<Mask, Mask>> pairs;
    for (Mask f : order) {
      if (state.matched(f)) continue;
      for (int i = 0; i < n; ++i) {
        const int x = (r + i) % n;
        if (!(f & bit(x))) continue;
        const Mask low = f & ~bit(x);
        if (!c.contains(low) || state.matched(low)) continue;
        state.pair(f, low);
        if (state.closes_cycle(f)) {
          state.unpair(f, low);
          continue;
        }
        pairs.emplace_back(f, low);
        break;
      }
    }
    GreedyMorseResult res;
    res.pairs = std::move(pairs);
    res.critical_by_dimension.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Mask f : c.faces()) {
      if (!state.matched(f)) {
        ++res.critical_by_dimension[static_cast<std::size_t>(cardinality(f))];
        ++res.critical_total;
      }
    }
    const auto degrees = std::count_if(res.critical_by_dimension.begin(), res.critical_by_dimension.end(),
                                       [](std::int64_t k) { return k != 0; });
    res.single_degree = degrees <= 1;
    res.attempts = r + 1;
    const bool stop = res.single_degree;
    if (!have_best || stop || res.critical_total < best.critical_total) {
      best = std::move(res);
      have_best = true;
    }
    best.attempts = r + 1;
    if (stop) break;
  }
  if (!verify_acyclic_pairs(best.pairs).acyclic) throw InternalError("greedy Morse matching has a cycle");
  return best;
}

}  // namespace shadelab
