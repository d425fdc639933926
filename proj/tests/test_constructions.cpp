#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ttpack/constructions.hpp"
#include "ttpack/error.hpp"
#include "ttpack/ramsey.hpp"

using namespace ttpack;
using namespace ttpack::constructions;

namespace {

int brute_min_degree(const OrientedGraph& g) {
  int best = g.n();
  for (int v = 0; v < g.n(); ++v) {
    int d = 0;
    for (int u = 0; u < g.n(); ++u) d += (g.has_arc(u, v) || g.has_arc(v, u)) ? 1 : 0;
    best = std::min(best, d);
  }
  return best;
}

}  // namespace

TEST_CASE("six-class construction at n = 60") {
  const auto c = prop2_graph(60, Rational(1, 60));
  CHECK(c.host.n() == 60);
  CHECK(brute_min_degree(c.host.graph()) == 49);
  CHECK(c.claimed_min_degree == 49);
  CHECK(c.claimed_packing_upper == 19);
  const auto check = verify_construction(c);
  CHECK(check.ok());
  CHECK(check.structural.bound == 19);
  CHECK_FALSE(check.exact);
}

TEST_CASE("six-class mini instance against the oracle") {
  const auto c = prop2_graph_sizes({1, 2, 2, 2, 2, 2});
  CHECK(oracle::max_packing(c.host.graph(), c.pattern) == 3);
  const auto check = verify_construction(c);
  CHECK(check.ok());
  REQUIRE(check.exact);
  CHECK(check.exact->lower == 3);
  CHECK(check.exact->optimal);
}

TEST_CASE("randomized free arcs keep the bound") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto c = prop2_graph_sizes({1, 2, 2, 2, 2, 2}, seed);
    CHECK(oracle::max_packing(c.host.graph(), c.pattern) <= 3);
    CHECK(verify_construction(c).ok());
  }
}

TEST_CASE("prop2 rejects non-integral class sizes") {
  CHECK_THROWS_AS(prop2_graph(61, Rational(1, 60)), InvalidInput);
}

TEST_CASE("star example leaves vertices uncovered") {
  const auto c = star_example(2, 4, Rational(1, 2));
  const auto check = verify_construction(c);
  CHECK(check.ok());
  REQUIRE(check.exact);
  const auto n = static_cast<std::size_t>(c.host.n());
  CHECK(n - check.exact->lower * static_cast<std::size_t>(c.pattern.size()) >=
        static_cast<std::size_t>(c.claimed_uncovered_lower));
}

TEST_CASE("star example with m = 3, h = 6, alpha = 1/3") {
  const auto c = star_example(3, 6, Rational(1, 3));
  CHECK(c.host.n() == 24);
  // Leaves come from the 16 vertices outside the root class, three per copy.
  CHECK(c.claimed_packing_upper == 5);
  const auto check = verify_construction(c);
  CHECK(check.ok());
  REQUIRE(check.exact);
  CHECK(check.exact->lower == 5);
  CHECK(check.exact->witness.uncovered_count() == 4);
}

TEST_CASE("blow-ups of TT_k-free tournaments contain no TT_k") {
  for (int k = 3; k <= 4; ++k) {
    for (int s = 1; s <= 3; ++s) {
      const auto c = f_blowup(k, s);
      CHECK_FALSE(oracle::has_tt(c.host.graph(), k));
      CHECK(verify_construction(c).ok());
    }
  }
}

TEST_CASE("ten-class construction") {
  const auto c = tt4_lower(98, Rational(1, 21));
  CHECK(c.host.n() == 98);
  // (25 - 3/21) 98 / 28 = 87 and (1 - 3/21) 98 / 4 = 21.
  CHECK(brute_min_degree(c.host.graph()) == 87);
  CHECK(c.claimed_packing_upper == 21);
  const auto check = verify_construction(c);
  CHECK(check.ok());
  CHECK(check.structural.bound <= 21);
  std::vector<int> part;
  for (int i = 0; i < 7; ++i) part.insert(part.end(), c.host.classes()[static_cast<std::size_t>(i)].begin(),
                                          c.host.classes()[static_cast<std::size_t>(i)].end());
  CHECK(part.size() == 77);
}

TEST_CASE("the seven-class part is TT_4-free at class sizes up to 3") {
  for (int s = 1; s <= 3; ++s) {
    const auto host = blowup(ramsey::tt4_free_7(), std::vector<int>(7, s));
    CHECK_FALSE(oracle::has_tt(host.graph(), 4));
  }
}

TEST_CASE("ten-class mini instance against the exact solver") {
  const auto c = tt4_lower_sizes({1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  const auto check = verify_construction(c, 24);
  CHECK(check.ok());
  REQUIRE(check.exact);
  CHECK(check.exact->lower <= 3);
  CHECK(static_cast<int>(check.exact->lower) == oracle::max_packing(c.host.graph(), c.pattern));
}

TEST_CASE("construction JSON round trip") {
  for (const auto& c : {prop2_graph_sizes({1, 2, 2, 2, 2, 2}), star_example(2, 4, Rational(1, 2)),
                        tt4_lower_sizes({1, 1, 1, 1, 1, 1, 1, 1, 1, 1})}) {
    const auto back = construction_from_json(to_json(c));
    CHECK(back.which == c.which);
    CHECK(back.host.graph() == c.host.graph());
    CHECK(back.host.classes() == c.host.classes());
    CHECK(back.claimed_packing_upper == c.claimed_packing_upper);
    CHECK(back.marked_classes == c.marked_classes);
    CHECK(to_json(back) == to_json(c));
  }
}

TEST_CASE("tampered claims are caught") {
  auto c = prop2_graph_sizes({1, 2, 2, 2, 2, 2});
  c.claimed_packing_upper = 2;
  CHECK_FALSE(verify_construction(c).ok());
  c = prop2_graph_sizes({1, 2, 2, 2, 2, 2});
  c.claimed_min_degree += 1;
  CHECK_FALSE(verify_construction(c).ok());
}
