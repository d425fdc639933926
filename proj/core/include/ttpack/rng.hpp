#ifndef TTPACK_RNG_HPP
#define TTPACK_RNG_HPP

#include <cstdint>
#include <vector>

#include "ttpack/graph.hpp"

namespace ttpack {

// SplitMix64 (Steele, Lea, Flood). Fixed so that test inputs are reproducible
// bit-for-bit in any language.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t operator()() { return next(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

  // Uniform in [0, bound) by plain modulo; bias is below 2^-40 for the
  // bounds used here and keeps the mapping trivially portable.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  // Uniform double in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// One draw per host edge (u < v, lexicographic); low bit 1 means u -> v.
OrientedGraph random_orientation(const UndirectedGraph& g, std::uint64_t seed);

inline OrientedGraph random_tournament(int n, std::uint64_t seed) {
  return random_orientation(UndirectedGraph::complete(n), seed);
}

// Fisher-Yates driven by SplitMix64.
std::vector<int> random_permutation(int n, SplitMix64& rng);

// Starts from K_n and deletes edges in a seeded random order while both
// endpoints stay above min_degree. Result has minimum degree >= min_degree.
UndirectedGraph random_dense_graph(int n, int min_degree, std::uint64_t seed);

// Every pair in different classes gets an arc with probability p, oriented
// from the lower-indexed class to the higher one.
OrientedGraph random_layered(const std::vector<int>& class_sizes, double p, std::uint64_t seed);

}  // namespace ttpack

#endif  // TTPACK_RNG_HPP
