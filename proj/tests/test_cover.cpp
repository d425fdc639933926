#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ttpack/cover.hpp"
#include "ttpack/error.hpp"
#include "ttpack/rng.hpp"

using namespace ttpack;

namespace {

PartitionedHost oriented_multipartite(int t, int r, std::uint64_t seed) {
  std::vector<int> sizes(static_cast<std::size_t>(r), t);
  const auto host = UndirectedGraph::complete_multipartite(sizes);
  return PartitionedHost(random_orientation(host, seed), contiguous_classes(sizes));
}

// Packing is valid, uses TT_k, and leaves at most one vertex per class.
void check_cover(const PartitionedHost& host, const cover::CoverResult& res, int k) {
  CHECK_FALSE(packing_violation(host.graph(), res.packing));
  CHECK(res.packing.pattern.size() == k);
  for (const auto& e : res.packing.embeddings) CHECK(oracle::induces_tt(host.graph(), e));
  CHECK(static_cast<int>(res.packing.uncovered_count()) <= res.guaranteed_max_uncovered);
  std::set<int> classes;
  bits::for_each(res.packing.uncovered, [&](int v) { classes.insert(host.class_of(v)); });
  CHECK(classes.size() == res.packing.uncovered_count());
}

}  // namespace

TEST_CASE("f* and r_k constants") {
  CHECK(cover::f_star(2) == 2);
  CHECK(cover::f_star(3) == 4);
  CHECK(cover::f_star(4) == 8);
  CHECK(cover::f_star(5) == 16);
  CHECK(cover::r_k(2) == 2);
  CHECK(cover::r_k(3) == 6);
  CHECK(cover::r_k(4) == 26);
  CHECK(cover::r_k(5) == 72);
}

TEST_CASE("k = 2 covers even class counts exactly") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto host = oriented_multipartite(1 + static_cast<int>(seed % 6), 2 + 2 * static_cast<int>(seed % 3), seed);
    const auto res = cover::cover_multipartite(host, {.k = 2});
    check_cover(host, res, 2);
    CHECK(res.packing.uncovered_count() == 0);
  }
}

TEST_CASE("k = 3 on six classes is a factor") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int t = 1 + static_cast<int>(seed % 8);
    const auto host = oriented_multipartite(t, 6 * (1 + static_cast<int>(seed % 2)), seed);
    const auto res = cover::cover_multipartite(host, {.k = 3});
    CHECK(res.path == "table");
    check_cover(host, res, 3);
    CHECK(is_valid_factor(host.graph(), res.packing));
  }
}

TEST_CASE("k = 3 layered path on eight classes") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto host = oriented_multipartite(1 + static_cast<int>(seed % 4), 8, seed);
    const auto res = cover::cover_multipartite(host, {.k = 3});
    CHECK(res.path == "layered");
    CHECK(res.guaranteed_max_uncovered == 3);
    check_cover(host, res, 3);
  }
}

TEST_CASE("cover never beats the optimum") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto host = oriented_multipartite(2, 8, seed);
    const auto res = cover::cover_multipartite(host, {.k = 3});
    const int best = oracle::max_packing(host.graph(), PatternDag::transitive(3));
    CHECK(static_cast<int>(res.packing.embeddings.size()) <= best);
  }
}

TEST_CASE("k = 4 leaves at most f*(4) - 1 vertices") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto host = oriented_multipartite(1 + static_cast<int>(seed % 5), 26, seed);
    const auto res = cover::cover_multipartite(host, {.k = 4});
    CHECK(res.guaranteed_max_uncovered == 7);
    check_cover(host, res, 4);
  }
}

TEST_CASE("tight k = 4 variant on twenty classes") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto host = oriented_multipartite(1 + static_cast<int>(seed % 5), 20, seed);
    const auto res = cover::cover_multipartite_k4_tight(host);
    CHECK(res.path == "layered_tight");
    CHECK(res.guaranteed_max_uncovered == 4);
    check_cover(host, res, 4);
  }
}

TEST_CASE("k = 5 uses the power-of-two f* bound") {
  const auto host = oriented_multipartite(1, 72, 3);
  const auto res = cover::cover_multipartite(host, {.k = 5});
  CHECK(res.f_star_k == 16);
  check_cover(host, res, 5);
}

TEST_CASE("cover input validation") {
  CHECK_THROWS_AS(cover::cover_multipartite(oriented_multipartite(2, 5, 1), {.k = 4}), InvalidInput);
  CHECK_THROWS_AS(cover::cover_multipartite(oriented_multipartite(2, 7, 1), {.k = 3}), InvalidInput);
  CHECK_THROWS_AS(cover::cover_multipartite(oriented_multipartite(2, 6, 1), {.k = 3, .r = 8}), InvalidInput);
  CHECK_THROWS_AS(cover::cover_multipartite_k4_tight(oriented_multipartite(1, 26, 1)), InvalidInput);
  const std::vector<int> sizes = {2, 3};
  const PartitionedHost uneven(random_orientation(UndirectedGraph::complete_multipartite(sizes), 1),
                               contiguous_classes(sizes));
  CHECK_THROWS_AS(cover::cover_multipartite(uneven, {.k = 2}), InvalidInput);
  const auto tour = random_tournament(6, 1);
  CHECK_THROWS_AS(PartitionedHost(tour, {{0, 1}, {2, 3}, {4, 5}}), InvalidInput);
  auto sparse = UndirectedGraph::complete_multipartite({2, 2, 2});
  sparse.remove_edge(0, 2);
  const PartitionedHost not_complete(random_orientation(sparse, 1), contiguous_classes({2, 2, 2}));
  CHECK_THROWS_AS(cover::cover_multipartite(not_complete, {.k = 2}), InvalidInput);
}
