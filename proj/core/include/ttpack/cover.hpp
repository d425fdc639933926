#ifndef TTPACK_COVER_HPP
#define TTPACK_COVER_HPP

#include <optional>
#include <string>

#include "ttpack/graph.hpp"
#include "ttpack/pattern.hpp"

namespace ttpack::cover {

// f*(k): exhaustively verified for k <= 4, the 2^(k-1) bound beyond.
int f_star(int k);

// Default class count: 2, 6, or k(f*(k) - 2) + 2.
int r_k(int k);

struct CoverParams {
  int k = 3;
  // Class count of the host; 0 means "take it from the host".
  int r = 0;
  // 0 means f_star(k).
  int f_star_k = 0;
};

struct CoverResult {
  Packing packing;
  int r = 0;
  int f_star_k = 0;
  // Largest uncovered count the construction guarantees.
  int guaranteed_max_uncovered = 0;
  // "table" (k = 3, six-class blocks), "layered" or "layered_tight".
  std::string path;
};

// Near-perfect TT_k cover of an oriented K(t, r), built layer by layer: the
// j-th lowest vertex of every class forms layer j, the top layer is covered
// greedily, and each lower layer first absorbs the vertices still uncovered
// (one TT_k through each) and then is greedily covered while at least f*(k)
// of its vertices remain.
// Throws InvalidInput unless the host is complete multipartite with equal
// classes and r is large enough for k (r >= r_k for k >= 4; r % 6 == 0 or
// r >= r_k for k = 3; r >= 2 for k = 2).
CoverResult cover_multipartite(const PartitionedHost& host, const CoverParams& params);

// TT_4 cover of K(t, 20) with at most 4 uncovered vertices: the layered
// algorithm with f*(4) = 8, where 4 | 20 and 4 | 8 pin the leftover of each
// layer to 0 or 4.
CoverResult cover_multipartite_k4_tight(const PartitionedHost& host);

}  // namespace ttpack::cover

#endif  // TTPACK_COVER_HPP
