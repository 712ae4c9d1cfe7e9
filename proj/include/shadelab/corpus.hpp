#pragma once

// Seeded instance streams shared by the suite driver and the tests.

#include <cstdint>
#include <vector>

#include "shadelab/feasibility.hpp"
#include "shadelab/graph.hpp"

namespace shadelab {

struct GraphStreamSpec {
  std::uint64_t seed = 42;
  int instances = 200;
  int min_vertices = 2;
  int max_vertices = 6;
  int min_edges = 1;
  int max_edges = 12;
  int directed_share = 0;  // percent of edges made directed
};

/// Random multigraphs; vertex and edge counts are drawn uniformly from the
/// spec ranges, then endpoints uniformly with replacement.
std::vector<Multigraph> graph_stream(const GraphStreamSpec& spec);

/// Every G ⊆ E when |E| ≤ 8, otherwise 32 random subsets, drawn from a
/// generator seeded by (seed, instance, source).
std::vector<Mask> target_stream(int edges, std::uint64_t seed, std::size_t instance, int source);

/// Connected simple graphs with 1..max_vertices vertices and up to max_edges
/// edges.
std::vector<Multigraph> connected_simple_stream(std::uint64_t seed, int instances, int max_vertices, int max_edges);

/// Sets of 1..max_points distinct points with coordinates p/q, |p| ≤ 3,
/// q ∈ {1, 2}, in dimensions 1..max_dimension.
std::vector<RationalPointSet> point_set_corpus(std::uint64_t seed, int count, int max_points, int max_dimension);

}  // namespace shadelab
