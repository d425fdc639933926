#ifndef TTPACK_PATTERN_HPP
#define TTPACK_PATTERN_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ttpack/bitset.hpp"
#include "ttpack/graph.hpp"

namespace ttpack {

// A small acyclic digraph to embed or pack (TT_k, TT(h,k), out-stars, ...).
class PatternDag {
 public:
  PatternDag() = default;
  // Throws InvalidInput if the arc set has a cycle or bad ids.
  PatternDag(int size, std::vector<Arc> arcs, std::string name = "custom");

  static PatternDag transitive(int k);
  // TT(h,k): class i is vertices [i*h, (i+1)*h), all arcs from lower to higher classes.
  static PatternDag blowup_transitive(int h, int k);
  // Root 0 with arcs to leaves 1..m.
  static PatternDag out_star(int m);
  static PatternDag from_graph(const OrientedGraph& g, std::string name = "file");
  // "ttk:<k>", "tthk:<h>,<k>", "outstar:<m>".
  static PatternDag parse(std::string_view spec);

  int size() const { return size_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::string& name() const { return name_; }
  Mask out(int v) const { return out_[static_cast<std::size_t>(v)]; }
  Mask in(int v) const { return in_[static_cast<std::size_t>(v)]; }
  bool has_arc(int u, int v) const { return bits::contains(out(u), v); }
  // Balanced coloring, when known (k classes of equal size, uniform direction).
  const std::optional<std::vector<std::vector<int>>>& coloring() const { return coloring_; }
  bool is_tournament() const;

  // Lowest-id-first topological order.
  std::vector<int> topological_order() const;
  // All arc-preserving bijections of the pattern onto itself (brute force).
  std::vector<std::vector<int>> automorphisms() const;

 private:
  int size_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
  std::string name_;
  std::optional<std::vector<std::vector<int>>> coloring_;
};

// Pairwise vertex-disjoint embeddings of a pattern; embeddings[i][p] is the
// host vertex playing pattern vertex p in copy i.
struct Packing {
  PatternDag pattern;
  std::vector<std::vector<int>> embeddings;
  VertexSet uncovered;

  std::size_t uncovered_count() const { return uncovered.count(); }
  bool is_factor() const { return uncovered.none(); }
};

// Builds a packing and fills in the uncovered set.
Packing make_packing(const OrientedGraph& host, PatternDag pattern, std::vector<std::vector<int>> embeddings);

// First violated packing invariant, or nullopt when the packing is valid.
std::optional<std::string> packing_violation(const OrientedGraph& host, const Packing& packing);

// Valid packing with nothing uncovered.
bool is_valid_factor(const OrientedGraph& host, const Packing& packing);

}  // namespace ttpack

#endif  // TTPACK_PATTERN_HPP
