#ifndef TTPACK_GRAPH_HPP
#define TTPACK_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ttpack/bitset.hpp"

namespace ttpack {

using Arc = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1, adjacency kept as bitset rows.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int n);

  static UndirectedGraph complete(int n);
  // Complete multipartite graph; class i occupies a contiguous id block.
  static UndirectedGraph complete_multipartite(const std::vector<int>& sizes);

  int n() const { return n_; }
  bool adjacent(int u, int v) const;
  const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return bits::count(neighbors(v)); }
  // 0 for the empty graph.
  int min_degree() const;
  std::size_t edge_count() const { return edges_; }
  // Edges as (u, v) with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Induced subgraph; vertex i of the result is vertices[i].
  UndirectedGraph induced(std::span<const int> vertices) const;

  bool operator==(const UndirectedGraph& other) const;

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  std::size_t edges_ = 0;
  std::vector<VertexSet> adj_;
};

// Word-sized digraph for the exact solvers. Only ever built explicitly via
// OrientedGraph::small() / induced_small() or directly, never implicitly.
class SmallDigraph {
 public:
  SmallDigraph() = default;
  explicit SmallDigraph(int n);

  static SmallDigraph transitive(int k);
  static SmallDigraph cyclic_triangle();

  int n() const { return n_; }
  Mask vertices() const { return bits::prefix(n_); }
  Mask out(int v) const { return out_[static_cast<std::size_t>(v)]; }
  Mask in(int v) const { return in_[static_cast<std::size_t>(v)]; }
  Mask neighbors(int v) const { return out(v) | in(v); }
  bool has_arc(int u, int v) const { return bits::contains(out(u), v); }

  void add_arc(int u, int v);
  void remove_arc(int u, int v);
  // Reverses an existing arc between u and v, whichever way it points.
  void flip(int u, int v);

  bool is_tournament() const;
  std::size_t arc_count() const;
  // Result vertex i is this graph's vertex vertices[i].
  SmallDigraph induced(std::span<const int> vertices) const;

  bool operator==(const SmallDigraph& other) const = default;

 private:
  int n_ = 0;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
};

// An orientation of an undirected host graph.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  explicit OrientedGraph(int n);

  // Host is the underlying graph of the arc list. Throws InvalidInput on
  // self-loops, out-of-range ids, duplicate arcs and conflicting orientation.
  static OrientedGraph from_arcs(int n, const std::vector<Arc>& arcs);
  // forward(u, v) is asked once per host edge with u < v; true means u -> v.
  template <class Forward>
  static OrientedGraph orient(const UndirectedGraph& host, Forward&& forward) {
    OrientedGraph g(host.n());
    for (const auto& [u, v] : host.edges()) {
      if (forward(u, v)) {
        g.add_arc(u, v);
      } else {
        g.add_arc(v, u);
      }
    }
    return g;
  }
  static OrientedGraph from_small(const SmallDigraph& s);

  int n() const { return host_.n(); }
  const UndirectedGraph& host() const { return host_; }
  bool adjacent(int u, int v) const { return host_.adjacent(u, v); }
  bool has_arc(int u, int v) const;
  const VertexSet& out(int v) const { return out_[static_cast<std::size_t>(v)]; }
  const VertexSet& in(int v) const { return in_[static_cast<std::size_t>(v)]; }
  int out_degree(int v) const { return bits::count(out(v)); }
  int in_degree(int v) const { return bits::count(in(v)); }
  std::size_t arc_count() const { return host_.edge_count(); }
  // All arcs sorted by (tail, head).
  std::vector<Arc> arcs() const;
  bool is_tournament() const;

  // Adds u -> v; the pair must not already be adjacent.
  void add_arc(int u, int v);
  void reverse_arc(int u, int v);

  // Exact-solver view; throws TooLarge when n > 64.
  SmallDigraph small() const;
  // Induced subdigraph on at most 64 vertices, vertex i = vertices[i].
  SmallDigraph induced_small(std::span<const int> vertices) const;
  OrientedGraph induced(std::span<const int> vertices) const;
  // Vertex v of this graph becomes perm[v] in the result.
  OrientedGraph relabeled(std::span<const int> perm) const;

  bool operator==(const OrientedGraph& other) const;

 private:
  UndirectedGraph host_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

// Oriented graph plus an ordered partition into independent classes.
class PartitionedHost {
 public:
  PartitionedHost() = default;
  // Throws InvalidInput if classes overlap, miss a vertex, or a class
  // contains a host edge.
  PartitionedHost(OrientedGraph graph, std::vector<std::vector<int>> classes);

  const OrientedGraph& graph() const { return graph_; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int v) const { return class_of_[static_cast<std::size_t>(v)]; }
  int n() const { return graph_.n(); }

  // Every pair of vertices in different classes is adjacent.
  bool is_complete_multipartite() const;
  // Common class size, if all classes have the same size.
  std::optional<int> uniform_class_size() const;
  // Class-level digraph when every pair of classes is either fully
  // non-adjacent or joined by arcs all pointing the same way.
  std::optional<SmallDigraph> quotient() const;

 private:
  OrientedGraph graph_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

// Contiguous class blocks [0, s0), [s0, s0 + s1), ...
std::vector<std::vector<int>> contiguous_classes(const std::vector<int>& sizes);

// Replaces vertex i of t by an independent set of sizes[i] vertices; arcs
// between classes follow t. Throws InvalidInput on a size-list mismatch or a
// zero entry.
PartitionedHost blowup(const OrientedGraph& t, const std::vector<int>& sizes);
PartitionedHost blowup(const SmallDigraph& t, const std::vector<int>& sizes);

}  // namespace ttpack

#endif  // TTPACK_GRAPH_HPP
