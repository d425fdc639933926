#ifndef TTPACK_CONSTRUCTIONS_HPP
#define TTPACK_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ttpack/graph.hpp"
#include "ttpack/packing.hpp"
#include "ttpack/pattern.hpp"
#include "ttpack/rational.hpp"
#include "ttpack/report.hpp"

namespace ttpack::constructions {

// An extremal host together with the bounds it is claimed to force.
struct ConstructionOutput {
  std::string which;
  std::string description;
  PartitionedHost host;
  PatternDag pattern;
  std::int64_t claimed_packing_upper = 0;
  std::int64_t claimed_uncovered_lower = 0;
  int claimed_min_degree = 0;
  // Classes the structural counting argument is phrased over.
  std::vector<int> marked_classes;
  packing::MarkedRule rule = packing::MarkedRule::kAuto;

  // The uncovered claim follows from the packing claim:
  // max(0, n - |pattern| * claimed_packing_upper) >= claimed_uncovered_lower.
  bool claims_consistent() const;
};

// Complete 6-partite host, |V_1| = (1 - 5a) n, |V_2..6| = a n with
// a = gamma + 1/6, oriented by the 6-tournament with 5 -> 6, 6 -> i -> 5
// (i = 1..4). Pattern TT_3, at most n/3 - gamma n copies. The six arcs
// inside {1, 2, 3, 4} go low -> high unless a seed is given.
ConstructionOutput prop2_graph(int n, const Rational& gamma, std::optional<std::uint64_t> seed = std::nullopt);
// Same tournament with explicit class sizes (mini instances).
ConstructionOutput prop2_graph_sizes(const std::vector<int>& sizes, std::optional<std::uint64_t> seed = std::nullopt);

// Complete (m+1)-partite host with classes h(1+a), h(1-a), h, ..., h oriented
// from lower to higher classes; pattern K_{1,m} directed out of the root.
// Every packing leaves at least a h vertices uncovered.
ConstructionOutput star_example(int m, int h, const Rational& alpha);

// Uniform blow-up of a TT_k-free tournament on f(k) - 1 vertices; no TT_k at
// all. k in 2..5 uses the witness from the Ramsey verifier.
ConstructionOutput f_blowup(int k, int class_size);
ConstructionOutput f_blowup(const SmallDigraph& tt_free, int k, int class_size);

// 10-partite host: classes 1..7 of size (1+gamma) 3n/28 oriented by the
// TT_4-free 7-tournament, classes 8..10 of size (1-3gamma) n/12. Every TT_4
// meets classes 8..10, so at most (1-3gamma) n/4 copies. Arcs touching
// classes 8..10 go low -> high unless a seed is given.
ConstructionOutput tt4_lower(int n, const Rational& gamma, std::optional<std::uint64_t> seed = std::nullopt);
// Explicit sizes for the ten classes (mini instances).
ConstructionOutput tt4_lower_sizes(const std::vector<int>& sizes, std::optional<std::uint64_t> seed = std::nullopt);

struct ConstructionCheck {
  int min_degree = 0;
  bool min_degree_matches = false;
  packing::StructuralBound structural;
  // Verified bound is no larger than the claim.
  bool structural_confirms = false;
  std::optional<packing::PackingBound> exact;
  bool exact_confirms = true;
  bool claims_consistent = false;

  bool ok() const { return min_degree_matches && structural_confirms && exact_confirms && claims_consistent; }
};

// Recomputes the minimum degree, runs the structural bound and, when the
// host has at most exact_limit vertices, the exact packing solver.
ConstructionCheck verify_construction(const ConstructionOutput& c, int exact_limit = 24);

Json to_json(const ConstructionOutput& c);
// Inverse of to_json; the host is re-validated.
ConstructionOutput construction_from_json(const Json& j);
Json to_json(const ConstructionCheck& check);

}  // namespace ttpack::constructions

#endif  // TTPACK_CONSTRUCTIONS_HPP
