#include "ttpack/packing.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <unordered_map>

#include "ttpack/error.hpp"
#include "ttpack/tt_search.hpp"

namespace ttpack::packing {
namespace {

// Backtracking embedder. Pattern vertices are placed in a fixed order; each
// candidate set is the allowed, unused vertices consistent with every
// already-placed pattern neighbour in both arc directions.
class Embedder {
 public:
  Embedder(const OrientedGraph& host, const PatternDag& pattern, VertexSet allowed)
      : host_(host), pattern_(pattern), allowed_(std::move(allowed)) {
    map_.assign(static_cast<std::size_t>(pattern.size()), -1);
  }

  // Calls visit(map) for each embedding; visit returns false to stop.
  // With first >= 0 pattern vertex `first` is pinned to host vertex `image`.
  bool run(const std::function<bool(const std::vector<int>&)>& visit, int first = -1, int image = -1) {
    order_.clear();
    if (first >= 0) order_.push_back(first);
    for (int p : pattern_.topological_order()) {
      if (p != first) order_.push_back(p);
    }
    visit_ = &visit;
    std::fill(map_.begin(), map_.end(), -1);
    used_ = VertexSet(allowed_.size());
    if (first >= 0) {
      if (!bits::contains(allowed_, image)) return true;
      place(first, image);
      const bool go_on = extend(1);
      unplace(first, image);
      return go_on;
    }
    return extend(0);
  }

 private:
  void place(int p, int v) {
    map_[static_cast<std::size_t>(p)] = v;
    bits::insert(used_, v);
  }
  void unplace(int p, int v) {
    map_[static_cast<std::size_t>(p)] = -1;
    bits::erase(used_, v);
  }

  VertexSet candidates(int p) const {
    VertexSet c = allowed_ - used_;
    bits::for_each(pattern_.in(p), [&](int q) {
      const int img = map_[static_cast<std::size_t>(q)];
      if (img >= 0) c &= host_.out(img);
    });
    bits::for_each(pattern_.out(p), [&](int q) {
      const int img = map_[static_cast<std::size_t>(q)];
      if (img >= 0) c &= host_.in(img);
    });
    return c;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return (*visit_)(map_);
    const int p = order_[depth];
    const VertexSet c = candidates(p);
    for (int v = bits::first(c); v >= 0; v = bits::next(c, v)) {
      place(p, v);
      const bool go_on = extend(depth + 1);
      unplace(p, v);
      if (!go_on) return false;
    }
    return true;
  }

  const OrientedGraph& host_;
  const PatternDag& pattern_;
  VertexSet allowed_;
  VertexSet used_;
  std::vector<int> map_;
  std::vector<int> order_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
};

// True if no automorphism maps `map` to a lexicographically smaller map.
bool is_orbit_minimum(const std::vector<int>& map, const std::vector<std::vector<int>>& automorphisms) {
  std::vector<int> image(map.size());
  for (const auto& sigma : automorphisms) {
    for (std::size_t p = 0; p < map.size(); ++p) image[p] = map[static_cast<std::size_t>(sigma[p])];
    if (image < map) return false;
  }
  return true;
}

Mask to_mask(const std::vector<int>& map) {
  Mask m = 0;
  for (int v : map) bits::insert(m, v);
  return m;
}

// Distinct vertex sets of all copies, each with one representative map.
struct CopySets {
  std::vector<Mask> sets;
  std::vector<std::vector<int>> maps;
  // by_min[v]: indices of sets whose lowest vertex is v, ascending by mask.
  std::vector<std::vector<std::size_t>> by_min;
  // roles[i][p]: vertices of set i that play pattern vertex p in some copy.
  std::vector<std::vector<Mask>> roles;
};

CopySets collect_copy_sets(const OrientedGraph& host, const PatternDag& pattern) {
  if (host.n() > kMaskBits) throw TooLarge("exact packing needs at most 64 vertices");
  CopySets out;
  std::unordered_map<Mask, std::size_t> seen;
  const auto h = static_cast<std::size_t>(pattern.size());
  Embedder embedder(host, pattern, bits::full_set(host.n()));
  embedder.run([&](const std::vector<int>& map) {
    const Mask m = to_mask(map);
    const auto [it, inserted] = seen.emplace(m, out.sets.size());
    if (inserted) {
      out.sets.push_back(m);
      out.maps.push_back(map);
      out.roles.emplace_back(h, Mask{0});
    }
    auto& roles = out.roles[it->second];
    for (std::size_t p = 0; p < h; ++p) bits::insert(roles[p], map[p]);
    return true;
  });
  out.by_min.resize(static_cast<std::size_t>(host.n()));
  for (std::size_t i = 0; i < out.sets.size(); ++i) {
    out.by_min[static_cast<std::size_t>(bits::first(out.sets[i]))].push_back(i);
  }
  for (auto& bucket : out.by_min) {
    std::sort(bucket.begin(), bucket.end(), [&](std::size_t a, std::size_t b) { return out.sets[a] < out.sets[b]; });
  }
  return out;
}

Mask coverable(const CopySets& copies, Mask free) {
  Mask cov = 0;
  for (Mask s : copies.sets) {
    if ((s & ~free) == 0) cov |= s;
  }
  return cov;
}

constexpr int kMaxRoleSubsetPattern = 10;

// Disjoint copies give every pattern vertex distinct images, so for any set
// P of pattern vertices the copy count is at most |union of their possible
// images| / |P|. P = everything is the plain |coverable| / h bound.
struct RelaxedBound {
  Mask coverable = 0;
  std::size_t bound = 0;
};

RelaxedBound relaxed_bound(const CopySets& copies, Mask free, int h) {
  std::vector<Mask> role(static_cast<std::size_t>(h), 0);
  RelaxedBound out;
  for (std::size_t i = 0; i < copies.sets.size(); ++i) {
    if ((copies.sets[i] & ~free) != 0) continue;
    out.coverable |= copies.sets[i];
    for (std::size_t p = 0; p < role.size(); ++p) role[p] |= copies.roles[i][p];
  }
  out.bound = static_cast<std::size_t>(bits::count(out.coverable) / h);
  if (h > kMaxRoleSubsetPattern) return out;
  for (std::uint32_t subset = 1; subset < (1U << h); ++subset) {
    Mask images = 0;
    for (int p = 0; p < h; ++p) {
      if ((subset >> p) & 1U) images |= role[static_cast<std::size_t>(p)];
    }
    const auto b = static_cast<std::size_t>(bits::count(images) / std::popcount(subset));
    out.bound = std::min(out.bound, b);
  }
  return out;
}

class PackingSearch {
 public:
  PackingSearch(const CopySets& copies, int h, std::uint64_t budget) : copies_(copies), h_(h), budget_(budget) {}

  void seed(std::vector<std::size_t> chosen) {
    best_ = chosen.size();
    best_chosen_ = std::move(chosen);
  }

  void run(Mask free) { dfs(free); }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::size_t>& best() const { return best_chosen_; }

 private:
  void dfs(Mask free) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (chosen_.size() > best_) {
      best_ = chosen_.size();
      best_chosen_ = chosen_;
    }
    const RelaxedBound relaxed = relaxed_bound(copies_, free, h_);
    if (chosen_.size() + relaxed.bound <= best_) return;
    const Mask cov = relaxed.coverable;
    const int v = bits::first(cov);
    for (std::size_t idx : copies_.by_min[static_cast<std::size_t>(v)]) {
      const Mask s = copies_.sets[idx];
      if ((s & ~cov) != 0) continue;
      chosen_.push_back(idx);
      dfs(cov & ~s);
      chosen_.pop_back();
      if (aborted_) return;
    }
    dfs(cov & ~bits::single(v));
  }

  const CopySets& copies_;
  int h_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t best_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_chosen_;
};

class FactorSearch {
 public:
  FactorSearch(const CopySets& copies, int n, std::uint64_t budget)
      : copies_(copies), containing_(static_cast<std::size_t>(n)), budget_(budget) {
    for (std::size_t idx = 0; idx < copies_.sets.size(); ++idx) {
      bits::for_each(copies_.sets[idx], [&](int v) { containing_[static_cast<std::size_t>(v)].push_back(idx); });
    }
  }

  bool run(Mask free) { return dfs(free); }
  bool aborted() const { return aborted_; }
  const std::vector<std::size_t>& chosen() const { return chosen_; }

 private:
  // Branches on the free vertex with the fewest copies left inside the free set.
  bool dfs(Mask free) {
    if (free == 0) return true;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    int pick = -1;
    std::size_t pick_count = 0;
    for (int v = bits::first(free); v >= 0; v = bits::next(free, v)) {
      std::size_t count = 0;
      for (std::size_t idx : containing_[static_cast<std::size_t>(v)]) {
        if ((copies_.sets[idx] & ~free) == 0) ++count;
      }
      if (count == 0) return false;
      if (pick < 0 || count < pick_count) {
        pick = v;
        pick_count = count;
      }
    }
    for (std::size_t idx : containing_[static_cast<std::size_t>(pick)]) {
      const Mask s = copies_.sets[idx];
      if ((s & ~free) != 0) continue;
      chosen_.push_back(idx);
      if (dfs(free & ~s)) return true;
      chosen_.pop_back();
      if (aborted_) return false;
    }
    return false;
  }

  const CopySets& copies_;
  std::vector<std::vector<std::size_t>> containing_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::size_t> chosen_;
};

Packing greedy_packing(const OrientedGraph& host, const PatternDag& pattern) {
  VertexSet allowed = bits::full_set(host.n());
  std::vector<std::vector<int>> embeddings;
  for (int v = 0; v < host.n(); ++v) {
    if (!bits::contains(allowed, v)) continue;
    if (auto map = find_embedding(host, pattern, allowed, v)) {
      for (int u : *map) bits::erase(allowed, u);
      embeddings.push_back(std::move(*map));
    }
  }
  return make_packing(host, pattern, std::move(embeddings));
}

}  // namespace

EmbeddingList enumerate_embeddings(const OrientedGraph& host, const PatternDag& pattern, std::size_t cap) {
  EmbeddingList out;
  const auto autos = pattern.automorphisms();
  Embedder embedder(host, pattern, bits::full_set(host.n()));
  embedder.run([&](const std::vector<int>& map) {
    if (!is_orbit_minimum(map, autos)) return true;
    if (out.maps.size() == cap) {
      out.complete = false;
      return false;
    }
    out.maps.push_back(map);
    return true;
  });
  return out;
}

std::optional<std::vector<int>> find_embedding(const OrientedGraph& host, const PatternDag& pattern,
                                               const VertexSet& allowed, int forced) {
  std::optional<std::vector<int>> found;
  Embedder embedder(host, pattern, allowed);
  auto take = [&](const std::vector<int>& map) {
    found = map;
    return false;
  };
  if (forced < 0) {
    embedder.run(take);
    return found;
  }
  for (int p = 0; p < pattern.size() && !found; ++p) embedder.run(take, p, forced);
  return found;
}

PackingBound max_packing(const OrientedGraph& host, const PatternDag& pattern, Mode mode, std::uint64_t budget) {
  const int h = pattern.size();
  if (h < 1) throw InvalidInput("pattern must have at least one vertex");
  PackingBound result;
  Packing greedy = greedy_packing(host, pattern);
  if (mode == Mode::kGreedy) {
    result.lower = greedy.embeddings.size();
    result.upper = static_cast<std::size_t>(host.n() / h);
    result.optimal = result.lower == result.upper;
    result.witness = std::move(greedy);
    return result;
  }

  const CopySets copies = collect_copy_sets(host, pattern);
  std::unordered_map<Mask, std::size_t> index;
  for (std::size_t i = 0; i < copies.sets.size(); ++i) index.emplace(copies.sets[i], i);
  std::vector<std::size_t> seed;
  for (const auto& map : greedy.embeddings) seed.push_back(index.at(to_mask(map)));

  PackingSearch search(copies, h, budget);
  search.seed(seed);
  const Mask all = bits::prefix(host.n());
  search.run(all);

  std::vector<std::vector<int>> embeddings;
  for (std::size_t idx : search.best()) embeddings.push_back(copies.maps[idx]);
  result.witness = make_packing(host, pattern, std::move(embeddings));
  result.lower = result.witness.embeddings.size();
  result.nodes = search.nodes();
  if (search.aborted()) {
    result.upper = relaxed_bound(copies, all, h).bound;
    result.optimal = result.lower == result.upper;
  } else {
    result.upper = result.lower;
    result.optimal = true;
  }
  return result;
}

FactorResult has_factor(const OrientedGraph& host, const PatternDag& pattern, std::uint64_t budget) {
  FactorResult result;
  const int h = pattern.size();
  if (h < 1 || host.n() % h != 0) {
    result.reason = "pattern size " + std::to_string(h) + " does not divide n = " + std::to_string(host.n());
    return result;
  }
  const CopySets copies = collect_copy_sets(host, pattern);
  FactorSearch search(copies, host.n(), budget);
  if (search.run(bits::prefix(host.n()))) {
    std::vector<std::vector<int>> embeddings;
    for (std::size_t idx : search.chosen()) embeddings.push_back(copies.maps[idx]);
    result.found = true;
    result.packing = make_packing(host, pattern, std::move(embeddings));
    return result;
  }
  if (search.aborted()) {
    result.budget_exhausted = true;
    result.reason = "node budget exhausted";
  } else {
    result.reason = "exhaustive search found no factor";
  }
  return result;
}

namespace {

struct MarkedRange {
  bool any = false;
  int min_marked = std::numeric_limits<int>::max();
  int max_marked = 0;

  void add(int marked) {
    any = true;
    min_marked = std::min(min_marked, marked);
    max_marked = std::max(max_marked, marked);
  }
};

// Class-level placements: pattern vertex p goes to class c[p]; each pattern
// arc needs the matching quotient arc, and no class receives more pattern
// vertices than it has members.
MarkedRange quotient_range(const PartitionedHost& host, const SmallDigraph& quotient, const PatternDag& pattern,
                           const std::vector<bool>& marked) {
  MarkedRange range;
  const auto order = pattern.topological_order();
  std::vector<int> cls(static_cast<std::size_t>(pattern.size()), -1);
  std::vector<int> load(static_cast<std::size_t>(host.num_classes()), 0);
  std::function<void(std::size_t, int)> extend = [&](std::size_t depth, int marked_count) {
    if (depth == order.size()) {
      range.add(marked_count);
      return;
    }
    const int p = order[depth];
    for (int c = 0; c < host.num_classes(); ++c) {
      const auto cu = static_cast<std::size_t>(c);
      if (load[cu] >= static_cast<int>(host.classes()[cu].size())) continue;
      bool ok = true;
      for (int q = 0; q < pattern.size() && ok; ++q) {
        const int cq = cls[static_cast<std::size_t>(q)];
        if (cq < 0) continue;
        if (pattern.has_arc(q, p) && !quotient.has_arc(cq, c)) ok = false;
        if (pattern.has_arc(p, q) && !quotient.has_arc(c, cq)) ok = false;
      }
      if (!ok) continue;
      cls[static_cast<std::size_t>(p)] = c;
      ++load[cu];
      extend(depth + 1, marked_count + (marked[cu] ? 1 : 0));
      --load[cu];
      cls[static_cast<std::size_t>(p)] = -1;
    }
  };
  extend(0, 0);
  return range;
}

constexpr std::size_t kStructuralEmbeddingCap = 1'000'000;

MarkedRange embedding_range(const PartitionedHost& host, const PatternDag& pattern, const std::vector<bool>& marked) {
  const auto list = enumerate_embeddings(host.graph(), pattern, kStructuralEmbeddingCap);
  if (!list.complete) throw BudgetExhausted("too many embeddings to verify the structural premise");
  MarkedRange range;
  for (const auto& map : list.maps) {
    int count = 0;
    for (int v : map) count += marked[static_cast<std::size_t>(host.class_of(v))] ? 1 : 0;
    range.add(count);
  }
  return range;
}

}  // namespace

StructuralBound structural_upper_bound(const PartitionedHost& host, const PatternDag& pattern,
                                       const std::vector<int>& marked_classes, MarkedRule rule) {
  const int h = pattern.size();
  std::vector<bool> marked(static_cast<std::size_t>(host.num_classes()), false);
  for (int c : marked_classes) {
    if (c < 0 || c >= host.num_classes()) throw InvalidInput("marked class index out of range");
    marked[static_cast<std::size_t>(c)] = true;
  }
  std::int64_t marked_size = 0;
  std::int64_t unmarked_size = 0;
  for (int c = 0; c < host.num_classes(); ++c) {
    const auto size = static_cast<std::int64_t>(host.classes()[static_cast<std::size_t>(c)].size());
    (marked[static_cast<std::size_t>(c)] ? marked_size : unmarked_size) += size;
  }

  const auto quotient = host.quotient();
  const MarkedRange range =
      quotient ? quotient_range(host, *quotient, pattern, marked) : embedding_range(host, pattern, marked);

  StructuralBound out;
  if (!range.any) {
    out.pattern_absent = true;
    out.rule = "no_copy";
    out.bound = 0;
    return out;
  }
  out.min_marked = range.min_marked;
  out.max_marked = range.max_marked;

  std::optional<std::int64_t> at_most_one;
  std::optional<std::int64_t> at_least_one;
  if (range.max_marked <= 1 && h >= 2) at_most_one = unmarked_size / (h - 1);
  if (range.min_marked >= 1) at_least_one = marked_size / range.min_marked;

  switch (rule) {
    case MarkedRule::kAtMostOneMarked:
      if (!at_most_one) throw InvalidInput("some copy has more than one vertex in the marked classes");
      out.bound = *at_most_one;
      out.rule = "at_most_one_marked";
      break;
    case MarkedRule::kAtLeastOneMarked:
      if (!at_least_one) throw InvalidInput("some copy avoids the marked classes");
      out.bound = *at_least_one;
      out.rule = "at_least_one_marked";
      break;
    case MarkedRule::kAuto:
      if (at_most_one && (!at_least_one || *at_most_one <= *at_least_one)) {
        out.bound = *at_most_one;
        out.rule = "at_most_one_marked";
      } else if (at_least_one) {
        out.bound = *at_least_one;
        out.rule = "at_least_one_marked";
      } else {
        throw InvalidInput("copies meet the marked classes in both fewer and more than one vertex");
      }
      break;
  }
  return out;
}

std::size_t max_packing_blowup(const PartitionedHost& host, int k) {
  const auto quotient = host.quotient();
  if (!quotient) throw InvalidInput("host is not a blow-up: arcs between some pair of classes are mixed");
  if (k < 1) throw InvalidInput("k must be positive");
  const int r = host.num_classes();
  if (r > kMaskBits) throw TooLarge("quotient has more than 64 classes");

  // A TT_k copy is a tournament, so it uses k distinct classes forming a TT_k
  // in the quotient; the problem is choosing multiplicities for those sets.
  std::vector<Mask> sets;
  for_each_tt_set(*quotient, quotient->vertices(), k, [&](Mask s) {
    sets.push_back(s);
    return true;
  });
  std::sort(sets.begin(), sets.end());

  std::vector<int> cap(static_cast<std::size_t>(r));
  int total = 0;
  for (int c = 0; c < r; ++c) {
    cap[static_cast<std::size_t>(c)] = static_cast<int>(host.classes()[static_cast<std::size_t>(c)].size());
    total += cap[static_cast<std::size_t>(c)];
  }

  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t, int)> dfs = [&](std::size_t j, std::size_t count, int remaining) {
    best = std::max(best, count);
    if (j == sets.size()) return;
    if (count + static_cast<std::size_t>(remaining / k) <= best) return;
    int most = std::numeric_limits<int>::max();
    bits::for_each(sets[j], [&](int c) { most = std::min(most, cap[static_cast<std::size_t>(c)]); });
    for (int x = most; x >= 0; --x) {
      bits::for_each(sets[j], [&](int c) { cap[static_cast<std::size_t>(c)] -= x; });
      dfs(j + 1, count + static_cast<std::size_t>(x), remaining - x * k);
      bits::for_each(sets[j], [&](int c) { cap[static_cast<std::size_t>(c)] += x; });
    }
  };
  dfs(0, 0, total);
  return best;
}

}  // namespace ttpack::packing
