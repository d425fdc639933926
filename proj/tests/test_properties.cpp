// Randomised properties over seeded instances.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ttpack/canonical.hpp"
#include "ttpack/cover.hpp"
#include "ttpack/packing.hpp"
#include "ttpack/rng.hpp"
#include "ttpack/tt_search.hpp"

using namespace ttpack;
using packing::Mode;

namespace {

OrientedGraph random_oriented(int n, double density, std::uint64_t seed) {
  SplitMix64 rng(seed);
  OrientedGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.unit() >= density) continue;
      if (rng.next() & 1U) {
        g.add_arc(u, v);
      } else {
        g.add_arc(v, u);
      }
    }
  }
  return g;
}

}  // namespace

TEST_CASE("packing number is invariant under relabelling") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 6 + static_cast<int>(seed % 9);
    const auto g = random_oriented(n, 0.75, seed);
    SplitMix64 rng(seed ^ 0xabcdefULL);
    const auto r = g.relabeled(random_permutation(n, rng));
    for (int k = 2; k <= 3; ++k) {
      const auto a = packing::max_packing(g, PatternDag::transitive(k), Mode::kExact);
      const auto b = packing::max_packing(r, PatternDag::transitive(k), Mode::kExact);
      REQUIRE(a.optimal);
      REQUIRE(b.optimal);
      CHECK(a.lower == b.lower);
    }
    CHECK(max_transitive(g).size() == max_transitive(r).size());
  }
}

TEST_CASE("tournament invariants survive relabelling") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 8);
    const auto t = random_tournament(n, seed);
    SplitMix64 rng(seed + 99);
    const auto r = t.relabeled(random_permutation(n, rng));
    CHECK(canonical_code(t.small()) == canonical_code(r.small()));
    for (int k = 3; k <= 4; ++k) CHECK(count_tt(t.small(), k) == count_tt(r.small(), k));
  }
}

TEST_CASE("packing number never drops when vertices are added") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = random_oriented(12, 0.8, seed);
    std::vector<int> keep;
    for (int v = 0; v < 12; v += (seed % 2 == 0 ? 1 : 2)) keep.push_back(v);
    if (keep.size() == 12) keep.pop_back();
    const auto sub = g.induced(keep);
    const auto whole = packing::max_packing(g, PatternDag::transitive(3), Mode::kExact);
    const auto part = packing::max_packing(sub, PatternDag::transitive(3), Mode::kExact);
    CHECK(part.lower <= whole.lower);
  }
}

TEST_CASE("greedy never exceeds exact and both certify their witnesses") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 3 + static_cast<int>(seed % 12);
    const auto g = random_oriented(n, 0.5 + 0.5 * static_cast<double>(seed % 3) / 2.0, seed);
    const auto pattern = PatternDag::transitive(2 + static_cast<int>(seed % 2));
    const auto exact = packing::max_packing(g, pattern, Mode::kExact);
    const auto greedy = packing::max_packing(g, pattern, Mode::kGreedy);
    CHECK(greedy.lower <= exact.lower);
    CHECK_FALSE(packing_violation(g, exact.witness));
    CHECK_FALSE(packing_violation(g, greedy.witness));
    CHECK(exact.lower == static_cast<std::size_t>(oracle::max_packing(g, pattern)));
  }
}

TEST_CASE("cover output is a valid near-factor for random t") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int t = 1 + static_cast<int>(seed % 10);
    std::vector<int> sizes(6, t);
    const PartitionedHost host(random_orientation(UndirectedGraph::complete_multipartite(sizes), seed),
                               contiguous_classes(sizes));
    const auto res = cover::cover_multipartite(host, {.k = 3});
    CHECK(is_valid_factor(host.graph(), res.packing));
    const auto recheck = packing::has_factor(host.graph(), PatternDag::transitive(3));
    CHECK(recheck.found);
  }
}

TEST_CASE("exact solver results are seed-free") {
  const auto g = random_oriented(14, 0.8, 5);
  const auto a = packing::max_packing(g, PatternDag::transitive(3), Mode::kExact);
  const auto b = packing::max_packing(g, PatternDag::transitive(3), Mode::kExact);
  CHECK(a.witness.embeddings == b.witness.embeddings);
  CHECK(a.nodes == b.nodes);
}
