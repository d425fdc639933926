#ifndef TTPACK_DENSE_FACTOR_HPP
#define TTPACK_DENSE_FACTOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttpack/graph.hpp"
#include "ttpack/pattern.hpp"
#include "ttpack/report.hpp"

namespace ttpack::dense {

inline constexpr std::uint64_t kDefaultCliqueBudget = 10'000'000;

struct FactorStage {
  std::string operation;
  std::vector<int> vertices;
};

// How a factor was assembled: disjoint stages, the residual vertex count
// after each one, and the arithmetic and degree checks made on the way.
struct FactorPlan {
  std::vector<FactorStage> stages;
  std::vector<int> residual_sizes;
  std::vector<std::pair<std::string, bool>> checks;

  // Stage vertex sets are pairwise disjoint and cover 0..n-1.
  bool partitions(int n) const;
  Json to_json() const;
};

struct FactorOutcome {
  bool found = false;
  Packing packing;
  FactorPlan plan;
  std::string failure;
  bool budget_exhausted = false;
  std::vector<std::string> warnings;
};

struct CliqueFactorResult {
  std::optional<std::vector<std::vector<int>>> cliques;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
  // Solved by the greedy pass alone.
  bool greedy = false;
};

// Partition into K_r's: a greedy pass (lowest free vertex, lexicographically
// first clique through it), then exact backtracking that always branches on
// the free vertex with the fewest free neighbours. r must divide n.
CliqueFactorResult clique_factor(const UndirectedGraph& host, int r, std::uint64_t budget = kDefaultCliqueBudget);

// Perfect matching of the underlying graph (Edmonds), each edge read as the
// TT_2 it is oriented as. Throws InvalidInput for odd n.
FactorOutcome tt2_factor(const OrientedGraph& g);

// TT_3-factor: for n = 3 mod 6 one TT_3 is removed first, the rest is split
// into K_6's and every oriented K_6 is factored by table lookup. Throws
// InvalidInput unless 3 | n.
FactorOutcome tt3_factor(const OrientedGraph& g, std::uint64_t budget = kDefaultCliqueBudget);

// Pattern-factor for an acyclic pattern on h vertices: peel n mod g_h
// vertices out of one g_h-clique, split the rest into g_h-cliques and factor
// each clique's tournament into TT_h copies, then read each TT_h as a
// pattern copy along a topological order. g_h = 0 uses the verified g(h)
// (h in {2, 3}). The minimum-degree hypothesis of the theorem is reported in
// the plan, not enforced; the residual degree bound the clique step relies
// on is checked and reported too.
FactorOutcome h_factor_dense(const OrientedGraph& g, const PatternDag& pattern, int g_h = 0,
                             std::uint64_t budget = kDefaultCliqueBudget);

// Pattern copy inside a transitive set: pattern vertex at topological
// position i goes to witness position i.
std::vector<int> pattern_map_from_transitive(const PatternDag& pattern, const std::vector<int>& transitive_order);

}  // namespace ttpack::dense

#endif  // TTPACK_DENSE_FACTOR_HPP
