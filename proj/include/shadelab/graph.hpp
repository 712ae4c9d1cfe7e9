#pragma once

// Multigraphs with a source vertex, and the infection maps built from them.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "shadelab/subset_map.hpp"

namespace shadelab {

enum class Orientation { undirected, directed };

/// Which endpoints of a directed edge count for infection. Undirected edges
/// always count both.
enum class EndpointRule { endpoints, source };

EndpointRule parse_endpoint_rule(std::string_view text);

struct Edge {
  std::string name;
  int a = 0;
  int b = 0;
  Orientation orientation = Orientation::undirected;  // directed means a -> b
};

class Multigraph {
 public:
  /// Index of `name`, adding the vertex if it is new.
  int add_vertex(const std::string& name);
  /// Throws UsageError on a duplicate edge name or unknown endpoint.
  void add_edge(std::string name, int a, int b, Orientation orientation = Orientation::undirected);
  void set_source(int v);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }
  const std::string& vertex_name(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  std::optional<int> vertex_index(std::string_view name) const;
  std::optional<int> source() const { return source_; }
  /// The declared source; UsageError if there is none.
  int require_source() const;

  /// Edge names in id order.
  GroundSet edge_ground() const;
  bool has_directed_edges() const;
  /// Connected when every orientation is ignored.
  bool is_connected() const;
  /// No self-loops, no parallel edges, no directed edges.
  bool is_simple() const;

  /// Vertices 0..n-1 named "0".."n-1", edges named "1".."m" with these
  /// endpoints, source 0.
  static Multigraph from_edge_list(int vertices, const std::vector<std::pair<int, int>>& edges);

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::optional<int> source_;
};

/// Edges with at least one endpoint reachable from v along F-paths.
Mask shade_edges(const Multigraph& g, int v, Mask f, EndpointRule rule = EndpointRule::endpoints);
SubsetMap edge_shade_map(const Multigraph& g, int v, EndpointRule rule = EndpointRule::endpoints);

struct SubsetFamily {
  GroundSet ground;
  std::vector<Mask> members;  // ascending code order
  std::int64_t alternating_sum = 0;
};

SubsetFamily pandemic_family(const Multigraph& g, int v, EndpointRule rule = EndpointRule::endpoints);

/// V \ {v} in vertex order, the ground set of vertex infection.
GroundSet vertex_ground(const Multigraph& g, int v);

/// Vertices w ≠ v joined to v by a path whose inner vertices lie in F. Codes
/// are over vertex_ground(g, v). Directed edges are rejected.
Mask shade_vertices(const Multigraph& g, int v, Mask f);
SubsetMap vertex_shade_map(const Multigraph& g, int v);
SubsetFamily vertex_pandemic_family(const Multigraph& g, int v);

/// F together with every edge no F-avoiding walk from v can reach.
Mask linesearch_closure(const Multigraph& g, int v, Mask f);
SubsetMap linesearch_map(const Multigraph& g, int v);

struct NucleusReport {
  std::size_t nucleus_count = 0;
  std::size_t pandemic_count = 0;
  bool injective = true;
  bool surjective = true;
  std::vector<Mask> unmatched_pandemic;  // pandemic sets that are no E(N)
  std::vector<Mask> stray_images;        // E(N) that is not pandemic

  bool bijection() const {
    return injective && surjective && stray_images.empty() && nucleus_count == pandemic_count;
  }
};

/// Enumerates connected subgraphs N ∋ v touching every edge and checks that
/// N ↦ E(N) is a bijection onto the pandemic family. Requires a connected
/// simple graph (PreconditionError otherwise).
NucleusReport nucleus_pandemic_check(const Multigraph& g, int v);

/// Seeded generator with a portable bounded draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

 private:
  std::mt19937_64 engine_;
};

/// n vertices, m edges with endpoints drawn uniformly with replacement; loops
/// and parallel edges arise naturally. With `directed_share` > 0 each edge is
/// directed with that probability (in percent). Source is vertex 0.
Multigraph random_multigraph(Rng& rng, int vertices, int edges, int directed_share = 0);

/// Connected simple undirected graph: a random spanning tree plus extra
/// distinct edges up to `edges` (capped by the complete graph).
Multigraph random_connected_simple_graph(Rng& rng, int vertices, int edges);

}  // namespace shadelab
