#include "ttpack/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "ttpack/error.hpp"

namespace ttpack {

namespace {

int parse_int(std::string_view text, std::string_view spec) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidInput("bad pattern spec: " + std::string(spec));
  }
  return value;
}

}  // namespace

PatternDag::PatternDag(int size, std::vector<Arc> arcs, std::string name)
    : size_(size), arcs_(std::move(arcs)), name_(std::move(name)) {
  if (size < 1 || size > kMaskBits) throw InvalidInput("pattern size must be in 1..64");
  out_.assign(static_cast<std::size_t>(size), 0);
  in_.assign(static_cast<std::size_t>(size), 0);
  for (const auto& [u, v] : arcs_) {
    if (u < 0 || v < 0 || u >= size || v >= size || u == v) throw InvalidInput("bad pattern arc");
    if (has_arc(u, v) || has_arc(v, u)) throw InvalidInput("duplicate pattern arc");
    bits::insert(out_[static_cast<std::size_t>(u)], v);
    bits::insert(in_[static_cast<std::size_t>(v)], u);
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (static_cast<int>(topological_order().size()) != size_) throw InvalidInput("pattern has a directed cycle");
}

PatternDag PatternDag::transitive(int k) {
  std::vector<Arc> arcs;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) arcs.emplace_back(u, v);
  }
  PatternDag p(k, std::move(arcs), "ttk:" + std::to_string(k));
  std::vector<std::vector<int>> coloring;
  for (int v = 0; v < k; ++v) coloring.push_back({v});
  p.coloring_ = std::move(coloring);
  return p;
}

PatternDag PatternDag::blowup_transitive(int h, int k) {
  if (h < 1 || k < 1) throw InvalidInput("tthk needs h, k >= 1");
  std::vector<Arc> arcs;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      for (int i = 0; i < h; ++i) {
        for (int j = 0; j < h; ++j) arcs.emplace_back(a * h + i, b * h + j);
      }
    }
  }
  PatternDag p(h * k, std::move(arcs), "tthk:" + std::to_string(h) + "," + std::to_string(k));
  std::vector<std::vector<int>> coloring(static_cast<std::size_t>(k));
  for (int v = 0; v < h * k; ++v) coloring[static_cast<std::size_t>(v / h)].push_back(v);
  p.coloring_ = std::move(coloring);
  return p;
}

PatternDag PatternDag::out_star(int m) {
  if (m < 1) throw InvalidInput("outstar needs m >= 1");
  std::vector<Arc> arcs;
  for (int v = 1; v <= m; ++v) arcs.emplace_back(0, v);
  return PatternDag(m + 1, std::move(arcs), "outstar:" + std::to_string(m));
}

PatternDag PatternDag::from_graph(const OrientedGraph& g, std::string name) {
  return PatternDag(g.n(), g.arcs(), std::move(name));
}

PatternDag PatternDag::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw InvalidInput("bad pattern spec: " + std::string(spec));
  const auto kind = spec.substr(0, colon);
  const auto rest = spec.substr(colon + 1);
  if (kind == "ttk") return transitive(parse_int(rest, spec));
  if (kind == "outstar") return out_star(parse_int(rest, spec));
  if (kind == "tthk") {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw InvalidInput("bad pattern spec: " + std::string(spec));
    return blowup_transitive(parse_int(rest.substr(0, comma), spec), parse_int(rest.substr(comma + 1), spec));
  }
  throw InvalidInput("unknown pattern kind: " + std::string(spec));
}

bool PatternDag::is_tournament() const {
  return arcs_.size() == static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_ - 1) / 2;
}

std::vector<int> PatternDag::topological_order() const {
  std::vector<int> order;
  Mask placed = 0;
  while (static_cast<int>(order.size()) < size_) {
    int pick = -1;
    for (int v = 0; v < size_; ++v) {
      if (!bits::contains(placed, v) && (in(v) & ~placed) == 0) {
        pick = v;
        break;
      }
    }
    if (pick < 0) break;
    order.push_back(pick);
    bits::insert(placed, pick);
  }
  return order;
}

std::vector<std::vector<int>> PatternDag::automorphisms() const {
  std::vector<int> perm(static_cast<std::size_t>(size_));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> result;
  do {
    bool ok = true;
    for (const auto& [u, v] : arcs_) {
      if (!has_arc(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

Packing make_packing(const OrientedGraph& host, PatternDag pattern, std::vector<std::vector<int>> embeddings) {
  Packing p{std::move(pattern), std::move(embeddings), bits::full_set(host.n())};
  for (const auto& emb : p.embeddings) {
    for (int v : emb) {
      if (v >= 0 && v < host.n()) bits::erase(p.uncovered, v);
    }
  }
  return p;
}

std::optional<std::string> packing_violation(const OrientedGraph& host, const Packing& packing) {
  const int h = packing.pattern.size();
  VertexSet used(static_cast<std::size_t>(host.n()));
  for (std::size_t i = 0; i < packing.embeddings.size(); ++i) {
    const auto& emb = packing.embeddings[i];
    const std::string tag = "embedding " + std::to_string(i) + ": ";
    if (static_cast<int>(emb.size()) != h) return tag + "wrong size";
    for (int v : emb) {
      if (v < 0 || v >= host.n()) return tag + "vertex out of range";
      if (bits::contains(used, v)) return tag + "vertex " + std::to_string(v) + " reused";
      bits::insert(used, v);
    }
    for (const auto& [a, b] : packing.pattern.arcs()) {
      if (!host.has_arc(emb[static_cast<std::size_t>(a)], emb[static_cast<std::size_t>(b)])) {
        return tag + "pattern arc " + std::to_string(a) + "->" + std::to_string(b) + " not preserved";
      }
    }
  }
  if (packing.uncovered.size() != static_cast<std::size_t>(host.n())) return "uncovered set has wrong universe";
  VertexSet expected = bits::full_set(host.n()) - used;
  if (expected != packing.uncovered) return "uncovered set does not match embeddings";
  return std::nullopt;
}

bool is_valid_factor(const OrientedGraph& host, const Packing& packing) {
  return !packing_violation(host, packing) && packing.is_factor();
}

}  // namespace ttpack
