#ifndef TTPACK_RAMSEY_HPP
#define TTPACK_RAMSEY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ttpack/canonical.hpp"
#include "ttpack/graph.hpp"
#include "ttpack/tt_search.hpp"

namespace ttpack::ramsey {

inline constexpr int kMaxEnumerationVertices = 8;

// One representative per isomorphism class of n-vertex tournaments, in the
// canonical labelling, sorted by code. Work is split by parent class over
// `jobs` threads; the result does not depend on `jobs`. Cached per n.
// Throws TooLarge for n > 8.
const std::vector<SmallDigraph>& tournaments(int n, int jobs = 1);

enum class Quantity { kF, kFStar, kG };
std::string to_string(Quantity q);
Quantity parse_quantity(const std::string& text);

struct UpperCheck {
  int n = 0;
  std::uint64_t classes_examined = 0;
  bool holds = false;
  // f(4) only: labelled tournaments on n vertices scanned without
  // isomorph rejection, and how many of them were TT_k-free.
  std::optional<std::uint64_t> raw_orientations;
  std::optional<std::uint64_t> raw_violations;
};

struct RamseyVerdict {
  Quantity quantity = Quantity::kF;
  int k = 0;
  int value = 0;
  // Both directions certified by exhaustive enumeration.
  bool certified = false;
  // Tournament on fewer vertices violating the property (value - 1 vertices
  // for f and f*, value - k for g). Absent when no smaller instance exists.
  std::optional<SmallDigraph> lower_witness;
  // f*: a vertex of the witness lying in no TT_k.
  std::optional<int> witness_vertex;
  // Number of violating isomorphism classes at the witness size.
  std::uint64_t lower_classes = 0;
  std::optional<UpperCheck> upper_check;
  // Side conditions, e.g. "f_star >= f".
  std::vector<std::pair<std::string, bool>> checks;
};

// k in 1..4 exact; k = 5 lower bound only (13-vertex witness by local search).
RamseyVerdict verify_f(int k, int jobs = 1);
// k in 1..4.
RamseyVerdict verify_f_star(int k, int jobs = 1);
// k in {2, 3}.
RamseyVerdict verify_g(int k, int jobs = 1);

// Labelled scan of all 2^C(n,2) tournaments built vertex by vertex; a prefix
// that already has a TT_k accounts for all its extensions at once.
struct RawScan {
  std::uint64_t total = 0;
  std::uint64_t tt_free = 0;
};
RawScan raw_scan(int n, int k);

// Isomorphism classes of n-vertex tournaments without TT_k.
std::vector<SmallDigraph> tt_free_classes(int n, int k, int jobs = 1);
// The TT_4-free tournament on 7 vertices; throws if it is not unique.
SmallDigraph tt4_free_7();

struct LocalSearchParams {
  int restarts = 64;
  // Total flip budget, split evenly over the restarts.
  std::int64_t flips = 1'000'000;
  std::uint64_t seed = 1;
  // Probability of a random (rather than best) flip inside a chosen copy.
  double noise = 0.15;
};

struct LocalSearchResult {
  std::optional<SmallDigraph> tournament;
  int restarts_used = 0;
  std::int64_t flips_used = 0;
};

// Min-conflicts hill climbing on arc flips minimising the number of TT_k
// copies. A returned tournament has been re-checked by find_tt.
LocalSearchResult find_tt_free(int k, int n, const LocalSearchParams& params = {});

// TT_k-factor of a small tournament by exhaustive search.
std::optional<std::vector<TransitiveWitness>> tournament_tt_factor(const SmallDigraph& t, int k);

// Factors of every n-vertex class (canonical labelling) that has one.
struct FactorTable {
  int n = 0;
  int k = 0;
  std::uint64_t classes = 0;
  std::map<CanonicalCode, std::vector<TransitiveWitness>> entries;
};
const FactorTable& tt_factor_table(int n, int k);
// Factor of an arbitrary labelled tournament via the table, mapped back to
// t's labels.
std::optional<std::vector<TransitiveWitness>> lookup_tt_factor(const SmallDigraph& t, int k);

// Fixture formats (regenerated by `ttpack ramsey table`).
std::string format_factor_table(const FactorTable& table);

}  // namespace ttpack::ramsey

#endif  // TTPACK_RAMSEY_HPP
