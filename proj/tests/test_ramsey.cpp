#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ttpack/canonical.hpp"
#include "ttpack/error.hpp"
#include "ttpack/io.hpp"
#include "ttpack/ramsey.hpp"
#include "ttpack/rng.hpp"
#include "ttpack/tt_search.hpp"

using namespace ttpack;

namespace {

// Quadratic-residue tournament on p vertices (p = 3 mod 4): i -> j iff
// j - i is a nonzero square mod p.
SmallDigraph paley(int p) {
  std::set<int> squares;
  for (int x = 1; x < p; ++x) squares.insert(x * x % p);
  SmallDigraph t(p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i != j && squares.count(((j - i) % p + p) % p)) t.add_arc(i, j);
    }
  }
  return t;
}

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

// f(k) by brute force over all labelled tournaments on up to 6 vertices.
int brute_f(int k) {
  for (int n = k;; ++n) {
    bool all = true;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << pairs) && all; ++b) {
      all = oracle::has_tt(oracle::tournament_from_bits(n, b), k);
    }
    if (all) return n;
  }
}

int brute_f_star(int k) {
  for (int n = k;; ++n) {
    bool all = true;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << pairs) && all; ++b) {
      const auto t = oracle::tournament_from_bits(n, b);
      for (int v = 0; v < n && all; ++v) all = oracle::vertex_in_tt(t, v, k);
    }
    if (all) return n;
  }
}

}  // namespace

TEST_CASE("find_tt and max_transitive agree with the subset oracle") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const auto g = random_oriented(n, seed % 3 == 0 ? 1.0 : 0.8, seed);
    const int best = oracle::max_tt(g);
    CHECK(max_transitive(g).size() == best);
    CHECK(is_transitive_witness(g, max_transitive(g)));
    for (int k = 2; k <= std::min(n, 6); ++k) {
      const auto w = find_tt(g, k);
      CHECK(w.has_value() == (k <= best));
      if (w) CHECK(is_transitive_witness(g, *w));
      const int v = static_cast<int>(seed % static_cast<std::uint64_t>(n));
      const auto through = tt_through_vertex(g, v, k, SearchOrder::kLexicographic);
      CHECK(through.has_value() == oracle::vertex_in_tt(g, v, k));
      if (through) {
        CHECK(is_transitive_witness(g, *through));
        CHECK(std::find(through->order.begin(), through->order.end(), v) != through->order.end());
      }
    }
  }
}

TEST_CASE("count_tt matches the subset oracle") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto t = random_tournament(9, seed).small();
    for (int k = 3; k <= 5; ++k) {
      std::uint64_t expected = 0;
      oracle::any_subset(9, k, [&](const std::vector<int>& s) {
        expected += oracle::induces_tt(t, s) ? 1 : 0;
        return false;
      });
      CHECK(count_tt(t, k) == expected);
    }
  }
}

TEST_CASE("isomorphism class counts") {
  // n <= 6 against the brute-force orbit count; 7 and 8 are the known
  // values of the tournament counting sequence.
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> orbits;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << pairs); ++b) {
      orbits.insert(oracle::min_code(oracle::tournament_from_bits(n, b)));
    }
    CHECK(ramsey::tournaments(n).size() == orbits.size());
  }
  CHECK(ramsey::tournaments(7).size() == 456);
  CHECK(ramsey::tournaments(8).size() == 6880);
  CHECK_THROWS_AS(ramsey::tournaments(9), TooLarge);
}

TEST_CASE("enumeration does not depend on the job count") {
  CHECK(ramsey::tournaments(7, 1) == ramsey::tournaments(7, 4));
}

TEST_CASE("small Ramsey values against brute force") {
  for (int k = 2; k <= 3; ++k) {
    CHECK(ramsey::verify_f(k).value == brute_f(k));
    CHECK(ramsey::verify_f_star(k).value == brute_f_star(k));
  }
}

TEST_CASE("verdicts are certified") {
  for (int k = 1; k <= 4; ++k) {
    const auto f = ramsey::verify_f(k);
    CHECK(f.certified);
    REQUIRE(f.upper_check);
    CHECK(f.upper_check->holds);
    if (f.lower_witness) CHECK_FALSE(oracle::has_tt(*f.lower_witness, k));
  }
  const auto fs = ramsey::verify_f_star(4);
  CHECK(fs.value == 8);
  REQUIRE(fs.lower_witness);
  REQUIRE(fs.witness_vertex);
  CHECK_FALSE(oracle::vertex_in_tt(*fs.lower_witness, *fs.witness_vertex, 4));
  CHECK(ramsey::verify_g(2).value == 2);
  CHECK(ramsey::verify_g(3).value == 6);
}

TEST_CASE("labelled scan matches brute force at small n") {
  for (int n = 3; n <= 6; ++n) {
    std::uint64_t free3 = 0;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << pairs); ++b) {
      if (!oracle::has_tt(oracle::tournament_from_bits(n, b), 3)) ++free3;
    }
    const auto raw = ramsey::raw_scan(n, 3);
    CHECK(raw.total == (std::uint64_t{1} << pairs));
    CHECK(raw.tt_free == free3);
  }
}

TEST_CASE("labelled TT_4-free 7-tournaments number 7!/21") {
  std::uint64_t free4 = 0;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << 21); ++b) {
    if (!oracle::has_tt(oracle::tournament_from_bits(7, b), 4)) ++free4;
  }
  CHECK(free4 == 240);
  CHECK(ramsey::raw_scan(7, 4).tt_free == free4);
}

TEST_CASE("the unique TT_4-free 7-tournament is the quadratic-residue tournament") {
  const auto t = ramsey::tt4_free_7();
  CHECK_FALSE(oracle::has_tt(t, 4));
  CHECK(isomorphic(t, paley(7)));
  CHECK(ramsey::tt_free_classes(7, 4).size() == 1);
  const auto fixture = load_graph(TTPACK_DATA_DIR "/tt4_free_7.txt").graph.small();
  CHECK(fixture == t);
}

TEST_CASE("every 6-tournament has a TT_3-factor") {
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << 15); b += 7) {
    const auto t = oracle::tournament_from_bits(6, b);
    const auto f = ramsey::lookup_tt_factor(t, 3);
    REQUIRE(f);
    REQUIRE(f->size() == 2);
    std::set<int> seen;
    for (const auto& w : *f) {
      CHECK(oracle::induces_tt(t, w.order));
      CHECK(is_transitive_witness(t, w));
      seen.insert(w.order.begin(), w.order.end());
    }
    CHECK(seen.size() == 6);
  }
  CHECK(ramsey::tt_factor_table(6, 3).entries.size() == 56);
}

TEST_CASE("local search finds a TT_5-free 13-tournament") {
  const auto found = ramsey::find_tt_free(5, 13);
  REQUIRE(found.tournament);
  CHECK(found.tournament->is_tournament());
  CHECK_FALSE(oracle::has_tt(*found.tournament, 5));

  const auto fixture = load_graph(TTPACK_DATA_DIR "/tt5_free_13.txt").graph.small();
  CHECK(fixture.is_tournament());
  CHECK_FALSE(oracle::has_tt(fixture, 5));
}

TEST_CASE("local search is seeded") {
  ramsey::LocalSearchParams params;
  params.seed = 9;
  const auto a = ramsey::find_tt_free(4, 7, params);
  const auto b = ramsey::find_tt_free(4, 7, params);
  REQUIRE(a.tournament);
  CHECK(*a.tournament == *b.tournament);
  CHECK(isomorphic(*a.tournament, paley(7)));
}

TEST_CASE("local search gives up on impossible sizes") {
  ramsey::LocalSearchParams params;
  params.restarts = 2;
  params.flips = 2000;
  CHECK_FALSE(ramsey::find_tt_free(4, 8, params).tournament);
}
