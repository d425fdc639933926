#include "ttpack/tt_search.hpp"

#include <algorithm>
#include <unordered_map>

#include "ttpack/error.hpp"

namespace ttpack {

namespace {

// Adapters so the chain search below is written once for both set types.
struct SmallView {
  const SmallDigraph& g;
  int n() const { return g.n(); }
  Mask out(int v) const { return g.out(v); }
  Mask in(int v) const { return g.in(v); }
};

struct LargeView {
  const OrientedGraph& g;
  int n() const { return g.n(); }
  const VertexSet& out(int v) const { return g.out(v); }
  const VertexSet& in(int v) const { return g.in(v); }
};

template <class Set>
Set intersect(const Set& a, const Set& b) {
  return a & b;
}

// Depth-first extension of a transitive chain v1 -> v2 -> ... where every new
// vertex lies in the common out-neighbourhood of all previous ones.
template <class View, class Set>
class ChainSearch {
 public:
  ChainSearch(const View& view, SearchOrder order, int forced) : view_(view), order_(order), forced_(forced) {}

  bool run(const Set& candidates, int k) {
    path_.clear();
    return extend(candidates, k, forced_ < 0);
  }

  const std::vector<int>& path() const { return path_; }

 private:
  std::vector<int> branch_order(const Set& choices, const Set& candidates) const {
    std::vector<int> vs = bits::to_vector(choices);
    if (order_ == SearchOrder::kDegree) {
      std::vector<std::pair<int, int>> keyed;
      keyed.reserve(vs.size());
      for (int v : vs) keyed.emplace_back(-bits::count(intersect<Set>(view_.out(v), candidates)), v);
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = keyed[i].second;
    }
    return vs;
  }

  bool extend(const Set& candidates, int need, bool forced_used) {
    if (need == 0) return forced_used;
    if (bits::count(candidates) < need) return false;
    Set choices = candidates;
    if (!forced_used) {
      // Everything placed before the forced vertex must be one of its in-neighbours.
      if (!bits::contains(candidates, forced_)) return false;
      choices = intersect<Set>(candidates, view_.in(forced_));
      bits::insert(choices, forced_);
    }
    for (int v : branch_order(choices, candidates)) {
      Set next = intersect<Set>(candidates, view_.out(v));
      if (bits::count(next) < need - 1) continue;
      path_.push_back(v);
      if (extend(next, need - 1, forced_used || v == forced_)) return true;
      path_.pop_back();
    }
    return false;
  }

  const View& view_;
  SearchOrder order_;
  int forced_;
  std::vector<int> path_;
};

template <class View, class Set>
std::optional<TransitiveWitness> search(const View& view, const Set& candidates, int k, SearchOrder order,
                                        int forced) {
  if (k <= 0) return TransitiveWitness{};
  ChainSearch<View, Set> s(view, order, forced);
  if (!s.run(candidates, k)) return std::nullopt;
  return TransitiveWitness{s.path()};
}

int max_size(const SmallDigraph& g, Mask set, std::unordered_map<Mask, int>& memo) {
  if (set == 0) return 0;
  if (const auto it = memo.find(set); it != memo.end()) return it->second;
  const int size = bits::count(set);
  int best = 0;
  for (int v = bits::first(set); v >= 0 && best < size; v = bits::next(set, v)) {
    const Mask next = set & g.out(v);
    if (bits::count(next) + 1 <= best) continue;
    best = std::max(best, 1 + max_size(g, next, memo));
  }
  memo.emplace(set, best);
  return best;
}

void chains(const SmallDigraph& g, Mask candidates, int need, Mask chosen, const std::function<bool(Mask)>& fn,
            std::uint64_t& visited, bool& stop) {
  if (need == 0) {
    ++visited;
    if (!fn(chosen)) stop = true;
    return;
  }
  for (int v = bits::first(candidates); v >= 0 && !stop; v = bits::next(candidates, v)) {
    const Mask next = candidates & g.out(v);
    if (bits::count(next) < need - 1) continue;
    chains(g, next, need - 1, chosen | bits::single(v), fn, visited, stop);
  }
}

}  // namespace

bool is_transitive_witness(const OrientedGraph& g, const TransitiveWitness& w) {
  const auto& o = w.order;
  for (std::size_t i = 0; i < o.size(); ++i) {
    for (std::size_t j = i + 1; j < o.size(); ++j) {
      if (!g.has_arc(o[i], o[j])) return false;
    }
  }
  return true;
}

bool is_transitive_witness(const SmallDigraph& g, const TransitiveWitness& w) {
  const auto& o = w.order;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (o[i] < 0 || o[i] >= g.n()) return false;
    for (std::size_t j = i + 1; j < o.size(); ++j) {
      if (o[j] < 0 || o[j] >= g.n() || !g.has_arc(o[i], o[j])) return false;
    }
  }
  return true;
}

std::optional<TransitiveWitness> find_tt(const SmallDigraph& g, int k, SearchOrder order) {
  return find_tt_within(g, g.vertices(), k, order);
}

std::optional<TransitiveWitness> find_tt(const OrientedGraph& g, int k, SearchOrder order) {
  if (g.n() <= kMaskBits) return find_tt(g.small(), k, order);
  return find_tt_within(g, bits::full_set(g.n()), k, order);
}

std::optional<TransitiveWitness> find_tt_within(const SmallDigraph& g, Mask candidates, int k, SearchOrder order) {
  return search(SmallView{g}, candidates & g.vertices(), k, order, -1);
}

std::optional<TransitiveWitness> find_tt_within(const OrientedGraph& g, const VertexSet& candidates, int k,
                                                SearchOrder order) {
  return search(LargeView{g}, candidates, k, order, -1);
}

int max_transitive_size(const SmallDigraph& g) {
  std::unordered_map<Mask, int> memo;
  return max_size(g, g.vertices(), memo);
}

TransitiveWitness max_transitive(const SmallDigraph& g) {
  const int size = max_transitive_size(g);
  auto w = find_tt(g, size, SearchOrder::kLexicographic);
  return w ? *w : TransitiveWitness{};
}

TransitiveWitness max_transitive(const OrientedGraph& g) { return max_transitive(g.small()); }

std::optional<TransitiveWitness> tt_through_vertex(const SmallDigraph& g, int v, int k, SearchOrder order) {
  return tt_through_vertex_within(g, g.vertices(), v, k, order);
}

std::optional<TransitiveWitness> tt_through_vertex(const OrientedGraph& g, int v, int k, SearchOrder order) {
  if (v < 0 || v >= g.n()) throw InvalidInput("tt_through_vertex: vertex out of range");
  if (k <= 0) return std::nullopt;
  if (g.n() <= kMaskBits) return tt_through_vertex(g.small(), v, k, order);
  return search(LargeView{g}, bits::full_set(g.n()), k, order, v);
}

std::optional<TransitiveWitness> tt_through_vertex_within(const SmallDigraph& g, Mask candidates, int v, int k,
                                                          SearchOrder order) {
  if (v < 0 || v >= g.n()) throw InvalidInput("tt_through_vertex: vertex out of range");
  if (k <= 0) return std::nullopt;
  return search(SmallView{g}, (candidates & g.vertices()) | bits::single(v), k, order, v);
}

std::uint64_t for_each_tt_set(const SmallDigraph& g, Mask within, int k, const std::function<bool(Mask)>& fn) {
  std::uint64_t visited = 0;
  bool stop = false;
  if (k <= 0) {
    visited = 1;
    fn(0);
    return visited;
  }
  chains(g, within & g.vertices(), k, 0, fn, visited, stop);
  return visited;
}

std::uint64_t count_tt(const SmallDigraph& g, int k) {
  return for_each_tt_set(g, g.vertices(), k, [](Mask) { return true; });
}

TransitiveWitness order_transitive_set(const SmallDigraph& g, Mask set) {
  std::vector<std::pair<int, int>> keyed;
  bits::for_each(set, [&](int v) { keyed.emplace_back(-bits::count(g.out(v) & set), v); });
  std::sort(keyed.begin(), keyed.end());
  TransitiveWitness w;
  for (const auto& kv : keyed) w.order.push_back(kv.second);
  return w;
}

}  // namespace ttpack
