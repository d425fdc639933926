#ifndef TTPACK_PACKING_HPP
#define TTPACK_PACKING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ttpack/graph.hpp"
#include "ttpack/pattern.hpp"

namespace ttpack::packing {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct EmbeddingList {
  std::vector<std::vector<int>> maps;
  // False when the cap stopped the enumeration early.
  bool complete = true;
};

// Injective arc-preserving maps of the pattern into the host (not induced).
// Maps equivalent under a pattern automorphism are reported once, as the
// lexicographically least member of the class.
EmbeddingList enumerate_embeddings(const OrientedGraph& host, const PatternDag& pattern, std::size_t cap);

// First embedding (in search order) using only `allowed` vertices and,
// when forced >= 0, containing vertex `forced`.
std::optional<std::vector<int>> find_embedding(const OrientedGraph& host, const PatternDag& pattern,
                                               const VertexSet& allowed, int forced = -1);

enum class Mode { kExact, kGreedy };

struct PackingBound {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool optimal = false;
  std::uint64_t nodes = 0;
  Packing witness;
};

// Exact mode: branch-and-bound on the lowest coverable vertex (cover it with
// some copy, or leave it out), pruned by count + floor(|coverable| / h).
// Needs n <= 64. When the node budget runs out the best packing found and
// the root bound are returned with optimal = false.
// Greedy mode: scan vertices in id order and take the first copy through
// each still-free vertex. Any size; upper is the trivial floor(n / h).
PackingBound max_packing(const OrientedGraph& host, const PatternDag& pattern, Mode mode,
                         std::uint64_t budget = kDefaultBudget);

struct FactorResult {
  bool found = false;
  std::optional<Packing> packing;
  // Explanation when not found (indivisible size, exhausted search, budget).
  std::string reason;
  bool budget_exhausted = false;
};

// Exact search for a pattern-factor; n <= 64.
FactorResult has_factor(const OrientedGraph& host, const PatternDag& pattern, std::uint64_t budget = kDefaultBudget);

enum class MarkedRule {
  // Every copy has at most one vertex in the marked classes.
  kAtMostOneMarked,
  // Every copy has at least one vertex in the marked classes.
  kAtLeastOneMarked,
  // Whichever of the above holds (smaller bound if both).
  kAuto,
};

struct StructuralBound {
  std::int64_t bound = 0;
  std::string rule;
  // Range of marked-vertex counts over all class-level placements of the pattern.
  int min_marked = 0;
  int max_marked = 0;
  bool pattern_absent = false;
};

// Counting bound on the packing number from how copies must meet the marked
// classes. The premise is verified over every class-level homomorphism of
// the pattern into the host's quotient (or, if the host is not a uniform
// blow-up, over its actual embeddings); throws InvalidInput if it fails.
StructuralBound structural_upper_bound(const PartitionedHost& host, const PatternDag& pattern,
                                       const std::vector<int>& marked_classes,
                                       MarkedRule rule = MarkedRule::kAuto);

// Packing number of TT_k in a uniform blow-up, computed on the class-level
// quotient as a capacity-constrained integer program.
std::size_t max_packing_blowup(const PartitionedHost& host, int k);

}  // namespace ttpack::packing

#endif  // TTPACK_PACKING_HPP
