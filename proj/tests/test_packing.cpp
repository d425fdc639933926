#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ttpack/error.hpp"
#include "ttpack/io.hpp"
#include "ttpack/packing.hpp"
#include "ttpack/rng.hpp"

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

const std::vector<PatternDag>& patterns() {
  static const std::vector<PatternDag> list = {
      PatternDag::transitive(2), PatternDag::transitive(3), PatternDag::out_star(2),
      PatternDag::blowup_transitive(2, 2), PatternDag(3, {{0, 1}, {1, 2}}, "path3")};
  return list;
}

}  // namespace

TEST_CASE("exact packing equals the brute-force optimum") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 5 + static_cast<int>(seed % 7);
    const auto g = random_oriented(n, 0.6 + 0.4 * static_cast<double>(seed % 2), seed);
    for (const auto& p : patterns()) {
      const int expected = oracle::max_packing(g, p);
      const auto exact = packing::max_packing(g, p, Mode::kExact);
      CHECK(exact.optimal);
      CHECK(exact.lower == static_cast<std::size_t>(expected));
      CHECK(exact.upper == exact.lower);
      CHECK_FALSE(packing_violation(g, exact.witness));
      CHECK(exact.witness.embeddings.size() == exact.lower);

      const auto greedy = packing::max_packing(g, p, Mode::kGreedy);
      CHECK(greedy.lower <= exact.lower);
      CHECK(greedy.upper >= exact.lower);
      CHECK_FALSE(packing_violation(g, greedy.witness));

      const auto factor = packing::has_factor(g, p);
      CHECK(factor.found == (expected * p.size() == n));
      if (factor.found) CHECK(is_valid_factor(g, *factor.packing));
    }
  }
}

TEST_CASE("embedding enumeration counts copies up to automorphism") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = random_tournament(8, seed);
    const auto list = packing::enumerate_embeddings(g, PatternDag::transitive(3), 1'000'000);
    CHECK(list.complete);
    CHECK(list.maps.size() == oracle::copy_sets(g, PatternDag::transitive(3)).size());
    for (const auto& m : list.maps) CHECK(oracle::induces_tt(g, m));
  }
  const auto g = random_tournament(9, 3);
  const auto capped = packing::enumerate_embeddings(g, PatternDag::transitive(3), 5);
  CHECK_FALSE(capped.complete);
  CHECK(capped.maps.size() == 5);
}

TEST_CASE("find_embedding respects allowed and forced vertices") {
  const auto g = OrientedGraph::from_small(SmallDigraph::transitive(6));
  const auto allowed = bits::make_set(6, {1, 3, 5});
  const auto m = packing::find_embedding(g, PatternDag::transitive(3), allowed);
  REQUIRE(m);
  CHECK(*m == std::vector<int>{1, 3, 5});
  const auto forced = packing::find_embedding(g, PatternDag::transitive(3), bits::full_set(6), 4);
  REQUIRE(forced);
  CHECK(std::find(forced->begin(), forced->end(), 4) != forced->end());
  CHECK_FALSE(packing::find_embedding(g, PatternDag::transitive(4), allowed));
}

TEST_CASE("cyclic triangle has no transitive triangle") {
  const auto g = load_graph(TTPACK_DATA_DIR "/cyclic_triangle.txt").graph;
  const auto b = packing::max_packing(g, PatternDag::transitive(3), Mode::kExact);
  CHECK(b.lower == 0);
  CHECK(b.upper == 0);
  CHECK(b.optimal);
  CHECK(b.witness.uncovered_count() == 3);
}

TEST_CASE("budget exhaustion keeps a valid bracket") {
  const auto g = random_oriented(40, 0.7, 11);
  const auto b = packing::max_packing(g, PatternDag::transitive(3), Mode::kExact, 10);
  CHECK(b.lower <= b.upper);
  CHECK(b.upper <= 13);
  CHECK_FALSE(packing_violation(g, b.witness));
  if (!b.optimal) CHECK(b.nodes >= 10);
}

TEST_CASE("exact mode refuses hosts beyond 64 vertices") {
  const auto g = random_tournament(70, 1);
  CHECK_THROWS_AS(packing::max_packing(g, PatternDag::transitive(3), Mode::kExact), TooLarge);
  const auto greedy = packing::max_packing(g, PatternDag::transitive(3), Mode::kGreedy);
  CHECK_FALSE(packing_violation(g, greedy.witness));
  CHECK(greedy.lower >= 15);
}

TEST_CASE("blow-up packing via the quotient equals the exact solver") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    SplitMix64 rng(seed);
    const int c = 3 + static_cast<int>(rng.below(3));
    std::vector<int> sizes;
    for (int i = 0; i < c; ++i) sizes.push_back(1 + static_cast<int>(rng.below(3)));
    const auto host = blowup(random_tournament(c, seed * 7), sizes);
    for (int k = 2; k <= 3; ++k) {
      const auto exact = packing::max_packing(host.graph(), PatternDag::transitive(k), Mode::kExact);
      REQUIRE(exact.optimal);
      CHECK(packing::max_packing_blowup(host, k) == exact.lower);
      CHECK(exact.lower == static_cast<std::size_t>(oracle::max_packing(host.graph(), PatternDag::transitive(k))));
    }
  }
}

TEST_CASE("structural bound dominates the optimum") {
  const auto host = load_graph(TTPACK_DATA_DIR "/prop2_mini.txt").partitioned();
  const auto tt3 = PatternDag::transitive(3);
  const auto s = packing::structural_upper_bound(host, tt3, {4, 5}, packing::MarkedRule::kAtMostOneMarked);
  CHECK(s.rule == "at_most_one_marked");
  CHECK(s.max_marked <= 1);
  CHECK(s.bound == 3);
  CHECK(oracle::max_packing(host.graph(), tt3) == 3);

  const auto none = packing::structural_upper_bound(blowup(SmallDigraph::cyclic_triangle(), {2, 2, 2}), tt3, {});
  CHECK(none.pattern_absent);
  CHECK(none.bound == 0);
}

TEST_CASE("structural rule violations are rejected") {
  const auto host = blowup(SmallDigraph::transitive(3), {2, 2, 2});
  CHECK_THROWS_AS(packing::structural_upper_bound(host, PatternDag::transitive(3), {0, 1},
                                                  packing::MarkedRule::kAtMostOneMarked),
                  InvalidInput);
}
