#include "shadelab/corpus.hpp"

#include <algorithm>

#include "shadelab/error.hpp"

namespace shadelab {

std::vector<Multigraph> graph_stream(const GraphStreamSpec& spec) {
  if (spec.min_vertices < 1 || spec.max_vertices < spec.min_vertices || spec.min_edges < 0 ||
      spec.max_edges < spec.min_edges) {
    throw UsageError("empty size range for the graph stream");
  }
  if (spec.max_edges > kMaxDenseElements) throw UsageError("graph stream edge cap is 20");
  Rng rng(spec.seed);
  std::vector<Multigraph> out;
  for (int i = 0; i < spec.instances; ++i) {
    const int v = rng.between(spec.min_vertices, spec.max_vertices);
    const int e = rng.between(spec.min_edges, spec.max_edges);
    out.push_back(random_multigraph(rng, v, e, spec.directed_share));
  }
  return out;
}

std::vector<Mask> target_stream(int edges, std::uint64_t seed, std::size_t instance, int source) {
  std::vector<Mask> out;
  if (edges <= 8) {
    for (Mask g = 0; g <= full_mask(edges); ++g) out.push_back(g);
    return out;
  }
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + instance * 1000003ULL + static_cast<std::uint64_t>(source));
  for (int k = 0; k < 32; ++k) out.push_back(static_cast<Mask>(rng.below(std::uint64_t{1} << edges)));
  return out;
}

std::vector<Multigraph> connected_simple_stream(std::uint64_t seed, int instances, int max_vertices, int max_edges) {
  Rng rng(seed);
  std::vector<Multigraph> out;
  for (int i = 0; i < instances; ++i) {
    const int v = rng.between(1, max_vertices);
    const int cap = std::min(max_edges, v * (v - 1) / 2);
    const int e = rng.between(std::min(v - 1, cap), cap);
    out.push_back(random_connected_simple_graph(rng, v, e));
  }
  return out;
}

std::vector<RationalPointSet> point_set_corpus(std::uint64_t seed, int count, int max_points, int max_dimension) {
  Rng rng(seed);
  std::vector<RationalPointSet> out;
  for (int i = 0; i < count; ++i) {
    const int dim = rng.between(1, max_dimension);
    const int size = rng.between(1, max_points);
    std::vector<std::vector<Rational>> points;
    std::size_t guard = 0;
    while (static_cast<int>(points.size()) < size && ++guard < 1000) {
      std::vector<Rational> p;
      for (int d = 0; d < dim; ++d) p.emplace_back(rng.between(-3, 3), rng.between(1, 2));
      if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(std::move(p));
    }
    out.emplace_back(GroundSet(static_cast<int>(points.size())).labels(), std::move(points));
  }
  return out;
}

}  // namespace shadelab
