#include "ttpack/cover.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "ttpack/error.hpp"
#include "ttpack/ramsey.hpp"
#include "ttpack/tt_search.hpp"

namespace ttpack::cover {

int f_star(int k) {
  if (k < 1) throw InvalidInput("k must be positive");
  if (k > 4) {
    if (k > 30) throw TooLarge("k too large");
    return 1 << (k - 1);
  }
  static std::mutex mutex;
  static std::map<int, int> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, ramsey::verify_f_star(k).value).first;
  return it->second;
}

int r_k(int k) {
  if (k < 2) throw InvalidInput("r_k needs k >= 2");
  if (k == 2) return 2;
  if (k == 3) return 6;
  return k * (f_star(k) - 2) + 2;
}

namespace {

struct Layers {
  int t = 0;
  int r = 0;
  // layer[j][c]: the j-th lowest vertex of class c.
  std::vector<std::vector<int>> layer;
};

Layers split_layers(const PartitionedHost& host) {
  if (!host.is_complete_multipartite()) throw InvalidInput("host is not complete multipartite");
  const auto t = host.uniform_class_size();
  if (!t) throw InvalidInput("classes must all have the same size");
  Layers out;
  out.t = *t;
  out.r = host.num_classes();
  out.layer.assign(static_cast<std::size_t>(out.t), std::vector<int>(static_cast<std::size_t>(out.r)));
  for (int c = 0; c < out.r; ++c) {
    auto members = host.classes()[static_cast<std::size_t>(c)];
    std::sort(members.begin(), members.end());
    for (int j = 0; j < out.t; ++j) {
      out.layer[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] = members[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

std::vector<int> to_host(const std::vector<int>& local, const TransitiveWitness& w) {
  std::vector<int> out;
  out.reserve(w.order.size());
  for (int i : w.order) out.push_back(local[static_cast<std::size_t>(i)]);
  return out;
}

// One induction step: `pending` vertices (uncovered so far, distinct
// classes) are absorbed using `fresh` (one vertex per class), then the rest
// of `fresh` is covered greedily. Returns the new uncovered set.
std::vector<int> absorb_layer(const PartitionedHost& host, const std::vector<int>& pending,
                              std::vector<int> fresh, int k, int f_star_k,
                              std::vector<std::vector<int>>& embeddings) {
  const OrientedGraph& g = host.graph();
  for (int u : pending) {
    std::vector<int> local{u};
    for (int v : fresh) {
      if (host.class_of(v) != host.class_of(u)) local.push_back(v);
    }
    const auto w = tt_through_vertex(g.induced(local), 0, k, SearchOrder::kLexicographic);
    if (!w) throw std::logic_error("cover: no TT_k through an uncovered vertex; f* constant is wrong");
    auto copy = to_host(local, *w);
    for (int v : copy) std::erase(fresh, v);
    embeddings.push_back(std::move(copy));
  }
  while (static_cast<int>(fresh.size()) >= f_star_k) {
    const auto w = find_tt(g.induced(fresh), k, SearchOrder::kLexicographic);
    if (!w) throw std::logic_error("cover: no TT_k in a large enough tournament; f* constant is wrong");
    auto copy = to_host(fresh, *w);
    for (int v : copy) std::erase(fresh, v);
    embeddings.push_back(std::move(copy));
  }
  return fresh;
}

CoverResult layered(const PartitionedHost& host, const Layers& layers, int k, int f_star_k) {
  std::vector<std::vector<int>> embeddings;
  std::vector<int> uncovered;
  for (int j = layers.t - 1; j >= 0; --j) {
    uncovered = absorb_layer(host, uncovered, layers.layer[static_cast<std::size_t>(j)], k, f_star_k, embeddings);
  }
  CoverResult out;
  out.packing = make_packing(host.graph(), PatternDag::transitive(k), std::move(embeddings));
  out.r = layers.r;
  out.f_star_k = f_star_k;
  out.guaranteed_max_uncovered = f_star_k - 1;
  out.path = "layered";
  return out;
}

CoverResult table_path(const PartitionedHost& host, const Layers& layers) {
  std::vector<std::vector<int>> embeddings;
  for (const auto& layer : layers.layer) {
    for (std::size_t block = 0; block < layer.size(); block += 6) {
      const std::vector<int> local(layer.begin() + static_cast<std::ptrdiff_t>(block),
                                   layer.begin() + static_cast<std::ptrdiff_t>(block + 6));
      const auto factor = ramsey::lookup_tt_factor(host.graph().induced_small(local), 3);
      if (!factor) throw std::logic_error("cover: 6-vertex tournament without a TT_3-factor");
      for (const auto& w : *factor) embeddings.push_back(to_host(local, w));
    }
  }
  CoverResult out;
  out.packing = make_packing(host.graph(), PatternDag::transitive(3), std::move(embeddings));
  out.r = layers.r;
  out.f_star_k = f_star(3);
  out.guaranteed_max_uncovered = 0;
  out.path = "table";
  return out;
}

}  // namespace

CoverResult cover_multipartite(const PartitionedHost& host, const CoverParams& params) {
  const int k = params.k;
  if (k < 2) throw InvalidInput("cover needs k >= 2");
  const Layers layers = split_layers(host);
  if (params.r != 0 && params.r != layers.r) {
    throw InvalidInput("host has " + std::to_string(layers.r) + " classes, expected " + std::to_string(params.r));
  }
  const int r = layers.r;
  const int fs = params.f_star_k != 0 ? params.f_star_k : f_star(k);
  if (k == 3 && r % 6 == 0) return table_path(host, layers);
  const int needed = k == 2 ? 2 : k * (fs - 2) + 2;
  if (r < needed) {
    throw InvalidInput("r = " + std::to_string(r) + " is below the required " + std::to_string(needed) + " for k = " +
                       std::to_string(k));
  }
  CoverResult out = layered(host, layers, k, fs);
  if (k == 2 && r % 2 == 0) out.guaranteed_max_uncovered = 0;
  return out;
}

CoverResult cover_multipartite_k4_tight(const PartitionedHost& host) {
  const Layers layers = split_layers(host);
  if (layers.r != 20) throw InvalidInput("tight TT_4 cover needs exactly 20 classes");
  CoverResult out = layered(host, layers, 4, f_star(4));
  out.guaranteed_max_uncovered = 4;
  out.path = "layered_tight";
  return out;
}

}  // namespace ttpack::cover
