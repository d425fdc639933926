#include "ttpack/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ttpack/error.hpp"

namespace ttpack {

namespace {

std::string pair_str(int u, int v) { return std::to_string(u) + " " + std::to_string(v); }

}  // namespace

// ---------------------------------------------------------------------------
// UndirectedGraph

UndirectedGraph::UndirectedGraph(int n) : n_(n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

UndirectedGraph UndirectedGraph::complete(int n) {
  UndirectedGraph g(n);
  for (int u = 0; u < n; ++u) {
    g.adj_[static_cast<std::size_t>(u)].set();
    g.adj_[static_cast<std::size_t>(u)].reset(static_cast<std::size_t>(u));
  }
  g.edges_ = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  return g;
}

UndirectedGraph UndirectedGraph::complete_multipartite(const std::vector<int>& sizes) {
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  UndirectedGraph g = complete(n);
  for (const auto& cls : contiguous_classes(sizes)) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) g.remove_edge(cls[i], cls[j]);
    }
  }
  return g;
}

void UndirectedGraph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidInput("vertex out of range: " + pair_str(u, v));
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
}

bool UndirectedGraph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return bits::contains(adj_[static_cast<std::size_t>(u)], v);
}

int UndirectedGraph::min_degree() const {
  int best = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_);
  for (int u = 0; u < n_; ++u) {
    for (int v = bits::next(neighbors(u), u); v >= 0; v = bits::next(neighbors(u), v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

void UndirectedGraph::add_edge(int u, int v) {
  check_pair(u, v);
  if (adjacent(u, v)) return;
  bits::insert(adj_[static_cast<std::size_t>(u)], v);
  bits::insert(adj_[static_cast<std::size_t>(v)], u);
  ++edges_;
}

void UndirectedGraph::remove_edge(int u, int v) {
  check_pair(u, v);
  if (!adjacent(u, v)) return;
  bits::erase(adj_[static_cast<std::size_t>(u)], v);
  bits::erase(adj_[static_cast<std::size_t>(v)], u);
  --edges_;
}

UndirectedGraph UndirectedGraph::induced(std::span<const int> vertices) const {
  UndirectedGraph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

bool UndirectedGraph::operator==(const UndirectedGraph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

// ---------------------------------------------------------------------------
// SmallDigraph

SmallDigraph::SmallDigraph(int n) : n_(n) {
  if (n < 0 || n > kMaskBits) throw TooLarge("SmallDigraph supports at most 64 vertices, got " + std::to_string(n));
  out_.assign(static_cast<std::size_t>(n), 0);
  in_.assign(static_cast<std::size_t>(n), 0);
}

SmallDigraph SmallDigraph::transitive(int k) {
  SmallDigraph t(k);
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) t.add_arc(u, v);
  }
  return t;
}

SmallDigraph SmallDigraph::cyclic_triangle() {
  SmallDigraph t(3);
  t.add_arc(0, 1);
  t.add_arc(1, 2);
  t.add_arc(2, 0);
  return t;
}

void SmallDigraph::add_arc(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidInput("vertex out of range: " + pair_str(u, v));
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  if (has_arc(v, u)) throw InvalidInput("conflicting orientation: " + pair_str(u, v));
  bits::insert(out_[static_cast<std::size_t>(u)], v);
  bits::insert(in_[static_cast<std::size_t>(v)], u);
}

void SmallDigraph::remove_arc(int u, int v) {
  bits::erase(out_[static_cast<std::size_t>(u)], v);
  bits::erase(in_[static_cast<std::size_t>(v)], u);
}

void SmallDigraph::flip(int u, int v) {
  if (has_arc(u, v)) {
    remove_arc(u, v);
    add_arc(v, u);
  } else if (has_arc(v, u)) {
    remove_arc(v, u);
    add_arc(u, v);
  } else {
    throw InvalidInput("no arc to flip between " + pair_str(u, v));
  }
}

bool SmallDigraph::is_tournament() const {
  for (int v = 0; v < n_; ++v) {
    if (neighbors(v) != (vertices() & ~bits::single(v))) return false;
  }
  return true;
}

std::size_t SmallDigraph::arc_count() const {
  std::size_t total = 0;
  for (Mask m : out_) total += static_cast<std::size_t>(bits::count(m));
  return total;
}

SmallDigraph SmallDigraph::induced(std::span<const int> vertices) const {
  SmallDigraph s(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (i != j && has_arc(vertices[i], vertices[j])) s.add_arc(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// OrientedGraph

OrientedGraph::OrientedGraph(int n) : host_(n) {
  out_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
  in_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

OrientedGraph OrientedGraph::from_arcs(int n, const std::vector<Arc>& arcs) {
  OrientedGraph g(n);
  for (const auto& [u, v] : arcs) g.add_arc(u, v);
  return g;
}

OrientedGraph OrientedGraph::from_small(const SmallDigraph& s) {
  OrientedGraph g(s.n());
  for (int u = 0; u < s.n(); ++u) {
    bits::for_each(s.out(u), [&](int v) { g.add_arc(u, v); });
  }
  return g;
}

bool OrientedGraph::has_arc(int u, int v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
  return bits::contains(out(u), v);
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count());
  for (int u = 0; u < n(); ++u) {
    bits::for_each(out(u), [&](int v) { result.emplace_back(u, v); });
  }
  return result;
}

bool OrientedGraph::is_tournament() const {
  const auto nn = static_cast<std::size_t>(n());
  return host_.edge_count() == nn * (nn > 0 ? nn - 1 : 0) / 2;
}

void OrientedGraph::add_arc(int u, int v) {
  if (u < 0 || v < 0 || u >= n() || v >= n()) throw InvalidInput("vertex out of range: " + pair_str(u, v));
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  if (has_arc(u, v)) throw InvalidInput("duplicate arc: " + pair_str(u, v));
  if (has_arc(v, u)) throw InvalidInput("conflicting orientation: " + pair_str(u, v));
  host_.add_edge(u, v);
  bits::insert(out_[static_cast<std::size_t>(u)], v);
  bits::insert(in_[static_cast<std::size_t>(v)], u);
}

void OrientedGraph::reverse_arc(int u, int v) {
  if (!has_arc(u, v)) throw InvalidInput("no arc " + pair_str(u, v));
  bits::erase(out_[static_cast<std::size_t>(u)], v);
  bits::erase(in_[static_cast<std::size_t>(v)], u);
  bits::insert(out_[static_cast<std::size_t>(v)], u);
  bits::insert(in_[static_cast<std::size_t>(u)], v);
}

SmallDigraph OrientedGraph::small() const {
  if (n() > kMaskBits) {
    throw TooLarge("exact solver needs n <= 64, got " + std::to_string(n()));
  }
  SmallDigraph s(n());
  for (int u = 0; u < n(); ++u) {
    bits::for_each(out(u), [&](int v) { s.add_arc(u, v); });
  }
  return s;
}

SmallDigraph OrientedGraph::induced_small(std::span<const int> vertices) const {
  SmallDigraph s(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (i != j && has_arc(vertices[i], vertices[j])) s.add_arc(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return s;
}

OrientedGraph OrientedGraph::induced(std::span<const int> vertices) const {
  OrientedGraph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (i != j && has_arc(vertices[i], vertices[j])) g.add_arc(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

OrientedGraph OrientedGraph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n()) throw InvalidInput("permutation size mismatch");
  OrientedGraph g(n());
  for (const auto& [u, v] : arcs()) g.add_arc(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return g;
}

bool OrientedGraph::operator==(const OrientedGraph& other) const {
  return host_ == other.host_ && out_ == other.out_;
}

// ---------------------------------------------------------------------------
// PartitionedHost

PartitionedHost::PartitionedHost(OrientedGraph graph, std::vector<std::vector<int>> classes)
    : graph_(std::move(graph)), classes_(std::move(classes)) {
  class_of_.assign(static_cast<std::size_t>(graph_.n()), -1);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (int v : classes_[c]) {
      if (v < 0 || v >= graph_.n()) throw InvalidInput("class vertex out of range: " + std::to_string(v));
      if (class_of_[static_cast<std::size_t>(v)] != -1) {
        throw InvalidInput("overlapping classes at vertex " + std::to_string(v));
      }
      class_of_[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
  }
  for (int v = 0; v < graph_.n(); ++v) {
    if (class_of_[static_cast<std::size_t>(v)] == -1) {
      throw InvalidInput("vertex " + std::to_string(v) + " is in no class");
    }
  }
  for (const auto& cls : classes_) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (graph_.adjacent(cls[i], cls[j])) {
          throw InvalidInput("class is not independent: edge " + pair_str(cls[i], cls[j]));
        }
      }
    }
  }
}

bool PartitionedHost::is_complete_multipartite() const {
  std::size_t expected = 0;
  const auto nn = static_cast<std::size_t>(n());
  std::size_t within = 0;
  for (const auto& cls : classes_) within += cls.size() * (cls.size() > 0 ? cls.size() - 1 : 0) / 2;
  expected = nn * (nn > 0 ? nn - 1 : 0) / 2 - within;
  return graph_.arc_count() == expected;
}

std::optional<int> PartitionedHost::uniform_class_size() const {
  if (classes_.empty()) return std::nullopt;
  const auto size = classes_.front().size();
  for (const auto& cls : classes_) {
    if (cls.size() != size) return std::nullopt;
  }
  return static_cast<int>(size);
}

std::optional<SmallDigraph> PartitionedHost::quotient() const {
  if (num_classes() > kMaskBits) return std::nullopt;
  SmallDigraph q(num_classes());
  for (int a = 0; a < num_classes(); ++a) {
    for (int b = a + 1; b < num_classes(); ++b) {
      std::size_t forward = 0;
      std::size_t backward = 0;
      for (int u : classes_[static_cast<std::size_t>(a)]) {
        for (int v : classes_[static_cast<std::size_t>(b)]) {
          if (graph_.has_arc(u, v)) {
            ++forward;
          } else if (graph_.has_arc(v, u)) {
            ++backward;
          }
        }
      }
      const std::size_t pairs = classes_[static_cast<std::size_t>(a)].size() * classes_[static_cast<std::size_t>(b)].size();
      if (forward == pairs && pairs > 0) {
        q.add_arc(a, b);
      } else if (backward == pairs && pairs > 0) {
        q.add_arc(b, a);
      } else if (forward + backward != 0) {
        return std::nullopt;
      }
    }
  }
  return q;
}

std::vector<std::vector<int>> contiguous_classes(const std::vector<int>& sizes) {
  std::vector<std::vector<int>> classes;
  int next = 0;
  for (int s : sizes) {
    if (s < 0) throw InvalidInput("negative class size");
    std::vector<int> cls(static_cast<std::size_t>(s));
    std::iota(cls.begin(), cls.end(), next);
    next += s;
    classes.push_back(std::move(cls));
  }
  return classes;
}

PartitionedHost blowup(const OrientedGraph& t, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != t.n()) {
    throw InvalidInput("blowup: expected " + std::to_string(t.n()) + " class sizes, got " +
                       std::to_string(sizes.size()));
  }
  if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s < 1; })) {
    throw InvalidInput("blowup: class sizes must be >= 1");
  }
  auto classes = contiguous_classes(sizes);
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  OrientedGraph g(n);
  for (const auto& [a, b] : t.arcs()) {
    for (int u : classes[static_cast<std::size_t>(a)]) {
      for (int v : classes[static_cast<std::size_t>(b)]) g.add_arc(u, v);
    }
  }
  return PartitionedHost(std::move(g), std::move(classes));
}

PartitionedHost blowup(const SmallDigraph& t, const std::vector<int>& sizes) {
  return blowup(OrientedGraph::from_small(t), sizes);
}

}  // namespace ttpack
