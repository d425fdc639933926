#ifndef TTPACK_CANONICAL_HPP
#define TTPACK_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ttpack/graph.hpp"

namespace ttpack {

inline constexpr int kMaxCanonicalVertices = 11;

// Isomorphism-class identifier for tournaments on at most 11 vertices.
//
// The code is the lexicographically smallest column-major upper-triangle
// bit string (pairs (0,1), (0,2), (1,2), (0,3), ...; bit set iff the
// earlier position beats the later one) over all vertex orders that list
// vertices by non-decreasing score. The score restriction is itself
// isomorphism-invariant, so equal codes <=> isomorphic tournaments.
struct CanonicalCode {
  int n = 0;
  // First code bit is the most significant of the C(n,2) used bits.
  std::uint64_t bits = 0;

  auto operator<=>(const CanonicalCode&) const = default;
  // Byte string: n, then the 8 bytes of `bits` big-endian.
  std::vector<std::uint8_t> bytes() const;
  // "n:hex", stable across platforms.
  std::string to_string() const;
  static CanonicalCode parse(const std::string& text);
};

struct CanonicalForm {
  CanonicalCode code;
  // order[position] = original vertex placed at that position.
  std::vector<int> order;
};

// Throws InvalidInput for non-tournaments or n > 11.
CanonicalForm canonical_form(const SmallDigraph& t);
inline CanonicalCode canonical_code(const SmallDigraph& t) { return canonical_form(t).code; }
// The canonically labelled representative.
SmallDigraph from_code(const CanonicalCode& code);
// Relabels t so that vertex order[i] becomes i.
SmallDigraph apply_order(const SmallDigraph& t, const std::vector<int>& order);

bool isomorphic(const SmallDigraph& a, const SmallDigraph& b);

}  // namespace ttpack

template <>
struct std::hash<ttpack::CanonicalCode> {
  std::size_t operator()(const ttpack::CanonicalCode& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.bits * 31 + static_cast<std::uint64_t>(c.n));
  }
};

#endif  // TTPACK_CANONICAL_HPP
