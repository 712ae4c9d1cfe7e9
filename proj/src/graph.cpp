#include "shadelab/graph.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "shadelab/error.hpp"

namespace shadelab {

EndpointRule parse_endpoint_rule(std::string_view text) {
  if (text == "endpoints") return EndpointRule::endpoints;
  if (text == "source") return EndpointRule::source;
  if (text == "target") {
    throw UsageError(
        "endpoint rule 'target' is not offered: infecting a directed edge only through its target "
        "does not give a shade map (Axiom 2 can fail)");
  }
  throw UsageError("unknown endpoint rule '" + std::string(text) + "' (expected endpoints or source)");
}

int Multigraph::add_vertex(const std::string& name) {
  if (auto i = vertex_index(name)) return *i;
  vertices_.push_back(name);
  return vertex_count() - 1;
}

void Multigraph::add_edge(std::string name, int a, int b, Orientation orientation) {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) {
    throw UsageError("edge '" + name + "' has an endpoint outside the graph");
  }
  if (std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.name == name; })) {
    throw UsageError("duplicate edge name '" + name + "'");
  }
  if (edge_count() >= 32) throw UsageError("at most 32 edges are supported");
  edges_.push_back({std::move(name), a, b, orientation});
}

void Multigraph::set_source(int v) {
  if (v < 0 || v >= vertex_count()) throw UsageError("source vertex out of range");
  source_ = v;
}

std::optional<int> Multigraph::vertex_index(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

int Multigraph::require_source() const {
  if (!source_) throw UsageError("graph declares no source vertex");
  return *source_;
}

GroundSet Multigraph::edge_ground() const {
  std::vector<std::string> names;
  for (const auto& e : edges_) names.push_back(e.name);
  return GroundSet(std::move(names));
}

bool Multigraph::has_directed_edges() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.orientation == Orientation::directed; });
}

bool Multigraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& e : edges_) {
      for (auto [from, to] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
        if (from == x && !seen[static_cast<std::size_t>(to)]) {
          seen[static_cast<std::size_t>(to)] = 1;
          stack.push_back(to);
        }
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool Multigraph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_) {
    if (e.orientation == Orientation::directed || e.a == e.b) return false;
    if (!seen.insert(std::minmax(e.a, e.b)).second) return false;
  }
  return true;
}

Multigraph Multigraph::from_edge_list(int vertices, const std::vector<std::pair<int, int>>& edges) {
  Multigraph g;
  for (int i = 0; i < vertices; ++i) g.add_vertex(std::to_string(i));
  int id = 1;
  for (auto [a, b] : edges) g.add_edge(std::to_string(id++), a, b);
  if (vertices > 0) g.set_source(0);
  return g;
}

namespace {

void require_vertex(const Multigraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw UsageError("source vertex out of range");
}

void require_edge_subset(const Multigraph& g, Mask f) {
  if (!is_subset(f, full_mask(g.edge_count()))) throw UsageError("edge set is not a subset of the graph's edges");
}

// Vertices reachable from v using only the edges in `usable`.
std::vector<char> reach(const Multigraph& g, int v, Mask usable) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> queue{v};
  seen[static_cast<std::size_t>(v)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (Mask rest = usable; rest; rest &= rest - 1) {
      const Edge& e = g.edge(lowest_element(rest));
      auto visit = [&](int to) {
        if (!seen[static_cast<std::size_t>(to)]) {
          seen[static_cast<std::size_t>(to)] = 1;
          queue.push_back(to);
        }
      };
      if (e.a == x) visit(e.b);
      if (e.b == x && e.orientation == Orientation::undirected) visit(e.a);
    }
  }
  return seen;
}

Mask touched_edges(const Multigraph& g, const std::vector<char>& seen, EndpointRule rule) {
  Mask out = 0;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    const bool by_a = seen[static_cast<std::size_t>(e.a)] != 0;
    const bool by_b = seen[static_cast<std::size_t>(e.b)] != 0;
    const bool source_only = e.orientation == Orientation::directed && rule == EndpointRule::source;
    if (by_a || (by_b && !source_only)) out |= bit(i);
  }
  return out;
}

SubsetFamily family_of(const SubsetMap& m) {
  SubsetFamily fam;
  fam.ground = m.ground();
  const Mask full = m.full();
  for (Mask f = 0; f < m.table().size(); ++f) {
    if (m(f) == full) fam.members.push_back(f);
  }
  fam.alternating_sum = alternating_sum(fam.members);
  return fam;
}

}  // namespace

Mask shade_edges(const Multigraph& g, int v, Mask f, EndpointRule rule) {
  require_vertex(g, v);
  require_edge_subset(g, f);
  return touched_edges(g, reach(g, v, f), rule);
}

SubsetMap edge_shade_map(const Multigraph& g, int v, EndpointRule rule) {
  require_vertex(g, v);
  return SubsetMap::tabulate(g.edge_ground(), [&](Mask f) { return touched_edges(g, reach(g, v, f), rule); });
}

SubsetFamily pandemic_family(const Multigraph& g, int v, EndpointRule rule) {
  return family_of(edge_shade_map(g, v, rule));
}

GroundSet vertex_ground(const Multigraph& g, int v) {
  require_vertex(g, v);
  std::vector<std::string> names;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w != v) names.push_back(g.vertex_name(w));
  }
  return GroundSet(std::move(names));
}

Mask shade_vertices(const Multigraph& g, int v, Mask f) {
  require_vertex(g, v);
  if (g.has_directed_edges()) throw UsageError("vertex infection is only defined for undirected graphs");
  const int others = g.vertex_count() - 1;
  if (!is_subset(f, full_mask(others))) throw UsageError("vertex set is not a subset of V \\ {v}");
  // Ground index of vertex w ≠ v.
  auto slot = [v](int w) { return w < v ? w : w - 1; };
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> queue{v};
  seen[static_cast<std::size_t>(v)] = 1;
  Mask infected = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    // Paths continue only through v itself or through F-vertices.
    if (x != v && !(f & bit(slot(x)))) continue;
    for (const auto& e : g.edges()) {
      for (auto [from, to] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
        if (from != x || to == v) continue;
        infected |= bit(slot(to));
        if (!seen[static_cast<std::size_t>(to)]) {
          seen[static_cast<std::size_t>(to)] = 1;
          queue.push_back(to);
        }
      }
    }
  }
  return infected;
}

SubsetMap vertex_shade_map(const Multigraph& g, int v) {
  auto ground = vertex_ground(g, v);
  if (g.has_directed_edges()) throw UsageError("vertex infection is only defined for undirected graphs");
  return SubsetMap::tabulate(std::move(ground), [&](Mask f) { return shade_vertices(g, v, f); });
}

SubsetFamily vertex_pandemic_family(const Multigraph& g, int v) { return family_of(vertex_shade_map(g, v)); }

Mask linesearch_closure(const Multigraph& g, int v, Mask f) {
  require_vertex(g, v);
  require_edge_subset(g, f);
  const Mask full = full_mask(g.edge_count());
  const Mask open = touched_edges(g, reach(g, v, full & ~f), EndpointRule::endpoints);
  return f | (full & ~open);
}

SubsetMap linesearch_map(const Multigraph& g, int v) {
  require_vertex(g, v);
  return SubsetMap::tabulate(g.edge_ground(), [&](Mask f) { return linesearch_closure(g, v, f); });
}

NucleusReport nucleus_pandemic_check(const Multigraph& g, int v) {
  require_vertex(g, v);
  if (!g.is_connected() || !g.is_simple()) {
    throw PreconditionError("nucleus correspondence needs a connected simple undirected graph",
                            {{"connected", g.is_connected()}, {"simple", g.is_simple()}});
  }
  if (g.vertex_count() > 20) throw UsageError("nucleus enumeration is limited to 20 vertices");
  const auto pandemic = pandemic_family(g, v);
  std::vector<char> hit(pandemic.members.size(), 0);
  NucleusReport report;
  report.pandemic_count = pandemic.members.size();

  const int n = g.vertex_count();
  const Mask others = full_mask(n) & ~bit(v);
  for_each_submask_ascending(others, [&](Mask rest) {
    const Mask nodes = rest | bit(v);
    Mask induced = 0;
    Mask touching = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      const bool in_a = (nodes & bit(e.a)) != 0;
      const bool in_b = (nodes & bit(e.b)) != 0;
      if (in_a && in_b) induced |= bit(i);
      if (in_a || in_b) touching |= bit(i);
    }
    if (touching != full_mask(g.edge_count())) return;
    for_each_submask_ascending(induced, [&](Mask edges) {
      const auto seen = reach(g, v, edges);
      for (int w = 0; w < n; ++w) {
        if ((nodes & bit(w)) && !seen[static_cast<std::size_t>(w)]) return;
      }
      ++report.nucleus_count;
      const auto it = std::lower_bound(pandemic.members.begin(), pandemic.members.end(), edges);
      if (it == pandemic.members.end() || *it != edges) {
        report.stray_images.push_back(edges);
        return;
      }
      auto& mark = hit[static_cast<std::size_t>(it - pandemic.members.begin())];
      if (mark) report.injective = false;
      mark = 1;
    });
  });
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (!hit[i]) {
      report.surjective = false;
      report.unmatched_pandemic.push_back(pandemic.members[i]);
    }
  }
  return report;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw UsageError("empty range");
  // Rejection keeps the draw identical across standard libraries.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Multigraph random_multigraph(Rng& rng, int vertices, int edges, int directed_share) {
  if (vertices < 1) throw UsageError("a random graph needs at least one vertex");
  std::vector<std::pair<int, int>> list;
  std::vector<bool> directed;
  for (int i = 0; i < edges; ++i) {
    const int a = rng.between(0, vertices - 1);
    const int b = rng.between(0, vertices - 1);
    list.emplace_back(a, b);
    directed.push_back(directed_share > 0 && rng.between(0, 99) < directed_share);
  }
  Multigraph g;
  for (int i = 0; i < vertices; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i < edges; ++i) {
    g.add_edge(std::to_string(i + 1), list[static_cast<std::size_t>(i)].first, list[static_cast<std::size_t>(i)].second,
               directed[static_cast<std::size_t>(i)] ? Orientation::directed : Orientation::undirected);
  }
  g.set_source(0);
  return g;
}

Multigraph random_connected_simple_graph(Rng& rng, int vertices, int edges) {
  if (vertices < 1) throw UsageError("a random graph needs at least one vertex");
  std::vector<std::pair<int, int>> list;
  std::set<std::pair<int, int>> used;
  for (int w = 1; w < vertices; ++w) {
    const int parent = rng.between(0, w - 1);
    list.emplace_back(parent, w);
    used.insert({parent, w});
  }
  const int complete = vertices * (vertices - 1) / 2;
  const int target = std::min(std::max(edges, vertices - 1), complete);
  while (static_cast<int>(list.size()) < target) {
    const int a = rng.between(0, vertices - 1);
    const int b = rng.between(0, vertices - 1);
    if (a == b) continue;
    const auto key = std::minmax(a, b);
    if (used.insert(key).second) list.emplace_back(key);
  }
  return Multigraph::from_edge_list(vertices, list);
}

}  // namespace shadelab
