#ifndef TTPACK_TT_SEARCH_HPP
#define TTPACK_TT_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ttpack/bitset.hpp"
#include "ttpack/graph.hpp"

namespace ttpack {

// Vertices v1..vk with an arc vi -> vj for every i < j.
struct TransitiveWitness {
  std::vector<int> order;

  int size() const { return static_cast<int>(order.size()); }
  bool operator==(const TransitiveWitness&) const = default;
};

enum class SearchOrder {
  // Branch on candidates by descending out-degree inside the candidate set,
  // ties to the lower id.
  kDegree,
  // Branch on candidates by increasing id; the first witness found is the
  // lexicographically least vertex sequence.
  kLexicographic,
};

bool is_transitive_witness(const OrientedGraph& g, const TransitiveWitness& w);
bool is_transitive_witness(const SmallDigraph& g, const TransitiveWitness& w);

// Exact search for a TT_k. k <= 0 yields an empty witness.
std::optional<TransitiveWitness> find_tt(const SmallDigraph& g, int k, SearchOrder order = SearchOrder::kDegree);
std::optional<TransitiveWitness> find_tt(const OrientedGraph& g, int k, SearchOrder order = SearchOrder::kDegree);
// Same, restricted to a candidate vertex set.
std::optional<TransitiveWitness> find_tt_within(const SmallDigraph& g, Mask candidates, int k,
                                                SearchOrder order = SearchOrder::kDegree);
std::optional<TransitiveWitness> find_tt_within(const OrientedGraph& g, const VertexSet& candidates, int k,
                                                SearchOrder order = SearchOrder::kDegree);

// Largest transitive subtournament. Size via subset-memoized recursion
// maxTT(S) = 1 + max_{v in S} maxTT(S & out(v)); witness by a fresh search.
// The OrientedGraph overload throws TooLarge when n > 64.
TransitiveWitness max_transitive(const SmallDigraph& g);
TransitiveWitness max_transitive(const OrientedGraph& g);
// Size only (memoized).
int max_transitive_size(const SmallDigraph& g);

// TT_k containing v, or nullopt if none exists.
std::optional<TransitiveWitness> tt_through_vertex(const SmallDigraph& g, int v, int k,
                                                   SearchOrder order = SearchOrder::kDegree);
std::optional<TransitiveWitness> tt_through_vertex(const OrientedGraph& g, int v, int k,
                                                   SearchOrder order = SearchOrder::kDegree);
std::optional<TransitiveWitness> tt_through_vertex_within(const SmallDigraph& g, Mask candidates, int v, int k,
                                                          SearchOrder order = SearchOrder::kDegree);

// Calls fn(mask) once for every k-vertex subset of `within` that induces a
// transitive tournament, in a deterministic order. fn returns false to stop.
// Returns the number of sets visited.
std::uint64_t for_each_tt_set(const SmallDigraph& g, Mask within, int k, const std::function<bool(Mask)>& fn);
// Number of vertex sets inducing TT_k.
std::uint64_t count_tt(const SmallDigraph& g, int k);

// Orders a transitive vertex set by decreasing out-degree inside the set,
// which is its unique transitive order.
TransitiveWitness order_transitive_set(const SmallDigraph& g, Mask set);

}  // namespace ttpack

#endif  // TTPACK_TT_SEARCH_HPP
