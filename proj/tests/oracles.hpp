// Brute-force reference implementations. Nothing here calls into the
// library's search code: only graph containers and the RNG are shared.
#ifndef TTPACK_TESTS_ORACLES_HPP
#define TTPACK_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_map>
#include <vector>

#include "ttpack/graph.hpp"
#include "ttpack/pattern.hpp"

namespace oracle {

using ttpack::OrientedGraph;
using ttpack::PatternDag;
using ttpack::SmallDigraph;

// Tournament on n vertices from the low C(n,2) bits of `code`, pair (i<j)
// in lexicographic order; bit set means i -> j.
inline SmallDigraph tournament_from_bits(int n, std::uint64_t code) {
  SmallDigraph t(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((code >> bit) & 1U) {
        t.add_arc(i, j);
      } else {
        t.add_arc(j, i);
      }
    }
  }
  return t;
}

// The vertex set induces a transitive tournament: every pair adjacent and
// the in-set out-degrees are exactly 0..|set|-1.
template <class G>
bool induces_tt(const G& g, const std::vector<int>& set) {
  std::vector<int> outdeg;
  for (int u : set) {
    int d = 0;
    for (int v : set) {
      if (u == v) continue;
      if (g.has_arc(u, v)) {
        ++d;
      } else if (!g.has_arc(v, u)) {
        return false;
      }
    }
    outdeg.push_back(d);
  }
  std::sort(outdeg.begin(), outdeg.end());
  for (std::size_t i = 0; i < outdeg.size(); ++i) {
    if (outdeg[i] != static_cast<int>(i)) return false;
  }
  return true;
}

// Calls fn(subset) for every k-subset of 0..n-1 until fn returns true.
template <class Fn>
bool any_subset(int n, int k, Fn&& fn) {
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (fn(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

template <class G>
bool has_tt(const G& g, int k) {
  return any_subset(g.n(), k, [&](const std::vector<int>& s) { return induces_tt(g, s); });
}

template <class G>
int max_tt(const G& g) {
  int best = g.n() > 0 ? 1 : 0;
  for (int k = 2; k <= g.n(); ++k) {
    if (has_tt(g, k)) best = k;
  }
  return best;
}

template <class G>
bool vertex_in_tt(const G& g, int v, int k) {
  return any_subset(g.n(), k, [&](const std::vector<int>& s) {
    return std::find(s.begin(), s.end(), v) != s.end() && induces_tt(g, s);
  });
}

// Smallest relabelled bit code over all n! permutations.
inline std::uint64_t min_code(const SmallDigraph& t) {
  const int n = t.n();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++bit) {
        if (t.has_arc(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) code |= std::uint64_t{1} << bit;
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Vertex sets (as bitmasks) of all pattern copies in the host, found by
// trying every injective map.
inline std::set<std::uint64_t> copy_sets(const OrientedGraph& host, const PatternDag& pattern) {
  std::set<std::uint64_t> out;
  const int n = host.n();
  const int h = pattern.size();
  std::vector<int> map(static_cast<std::size_t>(h), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == h) {
      for (const auto& [a, b] : pattern.arcs()) {
        if (!host.has_arc(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)])) return;
      }
      std::uint64_t mask = 0;
      for (int v : map) mask |= std::uint64_t{1} << v;
      out.insert(mask);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      map[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec, 0);
  return out;
}

// Maximum number of pairwise disjoint sets: branch on the lowest vertex,
// memoised on the free set.
inline int max_disjoint(const std::vector<std::uint64_t>& sets, std::uint64_t free_mask,
                        std::unordered_map<std::uint64_t, int>& memo) {
  if (free_mask == 0) return 0;
  if (const auto it = memo.find(free_mask); it != memo.end()) return it->second;
  const int v = __builtin_ctzll(free_mask);
  const std::uint64_t bit = std::uint64_t{1} << v;
  int best = max_disjoint(sets, free_mask & ~bit, memo);
  for (std::uint64_t s : sets) {
    if ((s & bit) && (s & free_mask) == s) best = std::max(best, 1 + max_disjoint(sets, free_mask & ~s, memo));
  }
  memo.emplace(free_mask, best);
  return best;
}

inline int max_packing(const OrientedGraph& host, const PatternDag& pattern) {
  const auto sets = copy_sets(host, pattern);
  const std::vector<std::uint64_t> list(sets.begin(), sets.end());
  const std::uint64_t all = host.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << host.n()) - 1;
  std::unordered_map<std::uint64_t, int> memo;
  return max_disjoint(list, all, memo);
}

}  // namespace oracle

#endif  // TTPACK_TESTS_ORACLES_HPP
