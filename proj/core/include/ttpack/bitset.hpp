#ifndef TTPACK_BITSET_HPP
#define TTPACK_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ttpack {

// Vertex sets come in two flavours: a single machine word for the exact
// solvers (n <= 64) and a dynamic bitset for everything else. The free
// functions below give both the same vocabulary so search code can be
// written once as a template.
using Mask = std::uint64_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr int kMaskBits = 64;

namespace bits {

inline Mask single(int i) { return Mask{1} << i; }
inline Mask prefix(int n) { return n >= kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1; }

inline int count(Mask m) { return std::popcount(m); }
inline bool any(Mask m) { return m != 0; }
inline bool contains(Mask m, int i) { return (m >> i) & 1U; }
inline void insert(Mask& m, int i) { m |= single(i); }
inline void erase(Mask& m, int i) { m &= ~single(i); }
inline int first(Mask m) { return m ? std::countr_zero(m) : -1; }
inline int next(Mask m, int i) {
  if (i + 1 >= kMaskBits) return -1;
  return first(m & ~prefix(i + 1));
}

inline int count(const VertexSet& s) { return static_cast<int>(s.count()); }
inline bool any(const VertexSet& s) { return s.any(); }
inline bool contains(const VertexSet& s, int i) { return s.test(static_cast<std::size_t>(i)); }
inline void insert(VertexSet& s, int i) { s.set(static_cast<std::size_t>(i)); }
inline void erase(VertexSet& s, int i) { s.reset(static_cast<std::size_t>(i)); }
inline int first(const VertexSet& s) {
  const auto pos = s.find_first();
  return pos == VertexSet::npos ? -1 : static_cast<int>(pos);
}
inline int next(const VertexSet& s, int i) {
  const auto pos = s.find_next(static_cast<std::size_t>(i));
  return pos == VertexSet::npos ? -1 : static_cast<int>(pos);
}

template <class Set, class Fn>
void for_each(const Set& s, Fn&& fn) {
  for (int v = first(s); v >= 0; v = next(s, v)) fn(v);
}

template <class Set>
std::vector<int> to_vector(const Set& s) {
  std::vector<int> out;
  for_each(s, [&](int v) { out.push_back(v); });
  return out;
}

inline VertexSet make_set(int n, const std::vector<int>& members) {
  VertexSet s(static_cast<std::size_t>(n));
  for (int v : members) s.set(static_cast<std::size_t>(v));
  return s;
}

inline VertexSet full_set(int n) {
  VertexSet s(static_cast<std::size_t>(n));
  s.set();
  return s;
}

}  // namespace bits
}  // namespace ttpack

#endif  // TTPACK_BITSET_HPP
