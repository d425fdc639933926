#ifndef TTPACK_EMBED_HPP
#define TTPACK_EMBED_HPP

#include <optional>
#include <string>
#include <vector>

#include "ttpack/graph.hpp"
#include "ttpack/pattern.hpp"
#include "ttpack/rational.hpp"

namespace ttpack::embed {

// e(A, B) / (|A| |B|), counting arcs from A to B. Throws on an empty side or
// overlapping sides.
Rational density(const OrientedGraph& g, const std::vector<int>& a, const std::vector<int>& b);

struct EmbedParams {
  int h = 1;
  int k = 2;
  Rational eta{1};
  Rational mu{1, 100};
  // Working class size; 0 means "the common class size of the instance".
  int w = 0;
};

// Exact evaluation of a strict inequality lhs < rhs.
struct InequalityCheck {
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string exact;
};

// (k - 1) mu + (h - 1) / w < (eta / 4)^(hk)
InequalityCheck embedding_inequality(const EmbedParams& params);
// (k - 1) mu + (h - 1) / (mu b) < (eta / 4)^(hk)
InequalityCheck packing_inequality(const EmbedParams& params, int b);

// What to do when a hypothesis is not met: throw, or record it and run anyway.
enum class Policy { kStrict, kReport };

// Ordered classes W_1..W_k of an oriented graph with no arc pointing from a
// later class to an earlier one. Vertices outside the classes are ignored.
class LayeredInstance {
 public:
  // Throws InvalidInput on overlapping classes, bad ids or a backward arc.
  LayeredInstance(OrientedGraph graph, std::vector<std::vector<int>> classes);
  const OrientedGraph& graph() const { return graph_; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int k() const { return static_cast<int>(classes_.size()); }

 private:
  OrientedGraph graph_;
  std::vector<std::vector<int>> classes_;
};

// Copy of g without the arcs running from a later class to an earlier one.
OrientedGraph drop_backward_arcs(const OrientedGraph& g, const std::vector<std::vector<int>>& classes);

struct StepTrace {
  // 1-based: q-th vertex of A_p.
  int p = 0;
  int q = 0;
  std::vector<int> b_sizes;
  // The proof's lower bounds on every |B_i| after this step.
  bool bounds_hold = true;
};

struct EmbedFailure {
  int p = 0;
  int q = 0;
  std::string reason;
};

struct EmbedResult {
  bool success = false;
  // A_1..A_k, h vertices each, on success.
  std::vector<std::vector<int>> parts;
  std::optional<EmbedFailure> failure;
  std::vector<StepTrace> trace;
  int bound_violations = 0;
  std::vector<std::string> precondition_violations;

  // Map for PatternDag::blowup_transitive(h, k): vertex i*h + j -> parts[i][j].
  std::vector<int> embedding() const;
};

// Candidate-set embedding of TT(h, k) with A_i inside W_i. Vertices are
// added to A_1, then A_2, ...; before each choice the candidates of B_p are
// those with at least (eta/2 - mu) |B_j| out-neighbours in every later B_j,
// the lowest-id one is taken and every later B_j shrinks to its
// out-neighbourhood. An empty candidate set is reported as a failure at
// step (p, q). Preconditions: equal sizes w, densities >= eta/2, the
// embedding inequality.
EmbedResult embed_tthk(const LayeredInstance& inst, const EmbedParams& params, Policy policy = Policy::kStrict);

struct GreedyResult {
  Packing packing;
  // (1 - 2 mu) b / h.
  Rational target;
  bool target_reached = false;
  // "below_threshold" or "embed_failed".
  std::string stop_reason;
  int final_working_size = 0;
  std::optional<EmbedFailure> last_failure;
  std::vector<std::string> precondition_violations;
};

// Repeated embed_tthk on the unused vertices, each class trimmed (highest
// ids dropped) to w = b - h |F|, while w >= 2 mu b. Class sizes must be b or
// b + 1 (always enforced); densities >= mu + eta/2 and the packing
// inequality are enforced per policy.
GreedyResult greedy_pack_tthk(const OrientedGraph& g, const std::vector<std::vector<int>>& classes,
                              const EmbedParams& params, int b, Policy policy = Policy::kStrict);

}  // namespace ttpack::embed

#endif  // TTPACK_EMBED_HPP
