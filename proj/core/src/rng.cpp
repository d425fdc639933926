#include "ttpack/rng.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "ttpack/error.hpp"

namespace ttpack {

OrientedGraph random_orientation(const UndirectedGraph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return OrientedGraph::orient(g, [&](int, int) { return (rng.next() & 1U) != 0; });
}

std::vector<int> random_permutation(int n, SplitMix64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
  }
  return perm;
}

UndirectedGraph random_dense_graph(int n, int min_degree, std::uint64_t seed) {
  if (min_degree > n - 1) throw InvalidInput("min_degree exceeds n - 1");
  UndirectedGraph g = UndirectedGraph::complete(n);
  auto edges = g.edges();
  SplitMix64 rng(seed);
  for (std::size_t i = edges.size(); i > 1; --i) {
    std::swap(edges[i - 1], edges[static_cast<std::size_t>(rng.below(i))]);
  }
  for (const auto& [u, v] : edges) {
    if (g.degree(u) > min_degree && g.degree(v) > min_degree) g.remove_edge(u, v);
  }
  return g;
}

OrientedGraph random_layered(const std::vector<int>& class_sizes, double p, std::uint64_t seed) {
  const auto classes = contiguous_classes(class_sizes);
  const int n = std::accumulate(class_sizes.begin(), class_sizes.end(), 0);
  OrientedGraph g(n);
  SplitMix64 rng(seed);
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      for (int u : classes[a]) {
        for (int v : classes[b]) {
          if (rng.unit() < p) g.add_arc(u, v);
        }
      }
    }
  }
  return g;
}

}  // namespace ttpack
