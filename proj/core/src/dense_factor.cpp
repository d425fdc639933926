#include "ttpack/dense_factor.hpp"

#include <algorithm>
#include <functional>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "ttpack/error.hpp"
#include "ttpack/ramsey.hpp"
#include "ttpack/tt_search.hpp"

namespace ttpack::dense {
namespace {

// Cliques of size r inside `pool` containing `v`, in lexicographic order.
class CliqueFinder {
 public:
  CliqueFinder(const UndirectedGraph& g, int r) : g_(g), r_(r) {}

  // visit(clique) returns false to stop; returns false if stopped.
  bool for_each(int v, const VertexSet& pool, const std::function<bool(const std::vector<int>&)>& visit) {
    clique_.assign(1, v);
    VertexSet cand = g_.neighbors(v) & pool;
    return extend(cand, visit);
  }

 private:
  bool extend(const VertexSet& cand, const std::function<bool(const std::vector<int>&)>& visit) {
    if (static_cast<int>(clique_.size()) == r_) return visit(clique_);
    if (bits::count(cand) < r_ - static_cast<int>(clique_.size())) return true;
    for (int u = bits::first(cand); u >= 0; u = bits::next(cand, u)) {
      VertexSet next = cand & g_.neighbors(u);
      // Only later candidates, so each clique is produced once.
      for (int w = bits::first(next); w >= 0 && w <= u; w = bits::next(next, w)) bits::erase(next, w);
      clique_.push_back(u);
      const bool go_on = extend(next, visit);
      clique_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const UndirectedGraph& g_;
  int r_;
  std::vector<int> clique_;
};

std::optional<std::vector<int>> first_clique(CliqueFinder& finder, int v, const VertexSet& pool) {
  std::optional<std::vector<int>> found;
  finder.for_each(v, pool, [&](const std::vector<int>& c) {
    found = c;
    return false;
  });
  return found;
}

class CliqueFactorSearch {
 public:
  CliqueFactorSearch(const UndirectedGraph& g, int r, std::uint64_t budget) : g_(g), r_(r), budget_(budget) {}

  bool run(VertexSet free) { return dfs(free); }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::vector<int>>& cliques() const { return chosen_; }

 private:
  bool dfs(const VertexSet& free) {
    const int v0 = bits::first(free);
    if (v0 < 0) return true;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    int pick = -1;
    int pick_degree = 0;
    for (int v = v0; v >= 0; v = bits::next(free, v)) {
      const int d = static_cast<int>((g_.neighbors(v) & free).count());
      if (d < r_ - 1) return false;
      if (pick < 0 || d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    bool solved = false;
    VertexSet pool = free;
    bits::erase(pool, pick);
    CliqueFinder finder(g_, r_);
    finder.for_each(pick, pool, [&](const std::vector<int>& clique) {
      VertexSet rest = free;
      for (int u : clique) bits::erase(rest, u);
      chosen_.push_back(clique);
      if (dfs(rest)) {
        solved = true;
        return false;
      }
      chosen_.pop_back();
      return !aborted_;
    });
    return solved;
  }

  const UndirectedGraph& g_;
  int r_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::vector<int>> chosen_;
};

int min_degree_within(const UndirectedGraph& g, const VertexSet& vs) {
  int best = -1;
  bits::for_each(vs, [&](int v) {
    const int d = static_cast<int>((g.neighbors(v) & vs).count());
    if (best < 0 || d < best) best = d;
  });
  return std::max(best, 0);
}

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// TT_k-factor of the tournament induced on `clique`, in host labels.
std::optional<std::vector<std::vector<int>>> factor_clique(const OrientedGraph& g, const std::vector<int>& clique,
                                                           int k) {
  const SmallDigraph t = g.induced_small(clique);
  const auto factor = t.n() <= ramsey::kMaxEnumerationVertices ? ramsey::lookup_tt_factor(t, k)
                                                                : ramsey::tournament_tt_factor(t, k);
  if (!factor) return std::nullopt;
  std::vector<std::vector<int>> out;
  for (const auto& w : *factor) {
    std::vector<int> order;
    for (int i : w.order) order.push_back(clique[static_cast<std::size_t>(i)]);
    out.push_back(std::move(order));
  }
  return out;
}

void record_stage(FactorPlan& plan, std::string operation, std::vector<int> vertices, int& remaining) {
  remaining -= static_cast<int>(vertices.size());
  plan.stages.push_back({std::move(operation), sorted_copy(std::move(vertices))});
  plan.residual_sizes.push_back(remaining);
}

void finish(FactorOutcome& out, const OrientedGraph& g) {
  out.plan.checks.emplace_back("stages partition the vertex set", out.plan.partitions(g.n()));
  out.plan.checks.emplace_back("factor re-verified", is_valid_factor(g, out.packing));
  out.found = is_valid_factor(g, out.packing) && out.plan.partitions(g.n());
  if (!out.found && out.failure.empty()) out.failure = "assembled factor failed verification";
}

}  // namespace

bool FactorPlan::partitions(int n) const {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int count = 0;
  for (const auto& stage : stages) {
    for (int v : stage.vertices) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
      ++count;
    }
  }
  return count == n;
}

Json FactorPlan::to_json() const {
  Json j;
  Json stage_list = Json::array();
  for (const auto& s : stages) stage_list.push_back({{"operation", s.operation}, {"vertices", s.vertices}});
  j["stages"] = std::move(stage_list);
  j["residual_sizes"] = residual_sizes;
  Json check_list = Json::array();
  for (const auto& [name, ok] : checks) check_list.push_back({{"check", name}, {"holds", ok}});
  j["checks"] = std::move(check_list);
  return j;
}

std::vector<int> pattern_map_from_transitive(const PatternDag& pattern, const std::vector<int>& transitive_order) {
  if (static_cast<int>(transitive_order.size()) != pattern.size()) throw InvalidInput("size mismatch");
  const auto topo = pattern.topological_order();
  std::vector<int> map(transitive_order.size());
  for (std::size_t i = 0; i < topo.size(); ++i) map[static_cast<std::size_t>(topo[i])] = transitive_order[i];
  return map;
}

CliqueFactorResult clique_factor(const UndirectedGraph& host, int r, std::uint64_t budget) {
  if (r < 1) throw InvalidInput("clique size must be positive");
  if (host.n() % r != 0) throw InvalidInput(std::to_string(r) + " does not divide n = " + std::to_string(host.n()));
  CliqueFactorResult result;

  CliqueFinder finder(host, r);
  VertexSet free = bits::full_set(host.n());
  std::vector<std::vector<int>> greedy;
  for (int v = bits::first(free); v >= 0; v = bits::first(free)) {
    bits::erase(free, v);
    const auto clique = first_clique(finder, v, free);
    if (!clique) break;
    for (int u : *clique) bits::erase(free, u);
    greedy.push_back(*clique);
  }
  if (static_cast<int>(greedy.size()) * r == host.n()) {
    result.cliques = std::move(greedy);
    result.greedy = true;
    return result;
  }

  CliqueFactorSearch search(host, r, budget);
  const bool ok = search.run(bits::full_set(host.n()));
  result.nodes = search.nodes();
  result.budget_exhausted = search.aborted();
  if (ok) result.cliques = search.cliques();
  return result;
}

FactorOutcome tt2_factor(const OrientedGraph& g) {
  const int n = g.n();
  if (n % 2 != 0) throw InvalidInput("TT_2-factor needs an even number of vertices");
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph bg(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.host().edges()) boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(static_cast<std::size_t>(n));
  boost::edmonds_maximum_cardinality_matching(bg, mate.data());

  FactorOutcome out;
  const int delta = g.host().min_degree();
  out.plan.checks.emplace_back("min degree >= n/2", 2 * delta >= n);
  if (2 * delta < n) out.warnings.push_back("minimum degree below n/2; a perfect matching is not guaranteed");

  std::vector<std::vector<int>> copies;
  const auto none = boost::graph_traits<Graph>::null_vertex();
  for (int u = 0; u < n; ++u) {
    const auto m = mate[static_cast<std::size_t>(u)];
    if (m == none || static_cast<int>(m) < u) continue;
    const int v = static_cast<int>(m);
    copies.push_back(g.has_arc(u, v) ? std::vector<int>{u, v} : std::vector<int>{v, u});
  }
  int remaining = n;
  std::vector<int> matched;
  for (const auto& c : copies) matched.insert(matched.end(), c.begin(), c.end());
  if (static_cast<int>(copies.size()) * 2 != n) {
    out.failure = "no perfect matching: maximum matching has " + std::to_string(copies.size()) + " edges";
    out.packing = make_packing(g, PatternDag::transitive(2), std::move(copies));
    return out;
  }
  record_stage(out.plan, "perfect_matching", std::move(matched), remaining);
  out.packing = make_packing(g, PatternDag::transitive(2), std::move(copies));
  finish(out, g);
  return out;
}

FactorOutcome tt3_factor(const OrientedGraph& g, std::uint64_t budget) {
  const int n = g.n();
  if (n % 3 != 0) throw InvalidInput("TT_3-factor needs 3 | n");
  FactorOutcome out;
  const UndirectedGraph& host = g.host();
  const int delta = host.min_degree();
  const int needed = (5 * n + 5) / 6;
  out.plan.checks.emplace_back("min degree >= ceil(5n/6)", delta >= needed);
  if (delta < needed) out.warnings.push_back("minimum degree below ceil(5n/6); a factor is not guaranteed");

  std::vector<std::vector<int>> copies;
  VertexSet rest = bits::full_set(n);
  int remaining = n;
  if (n % 6 == 3) {
    const auto w = find_tt(g, 3, SearchOrder::kLexicographic);
    if (!w) {
      out.failure = "no TT_3 to remove for n = 3 mod 6";
      return out;
    }
    for (int v : w->order) bits::erase(rest, v);
    copies.push_back(w->order);
    record_stage(out.plan, "remove_tt3", w->order, remaining);
    // ceil(5n/6) - 3 >= 5(n-3)/6, and the actual residual degree.
    out.plan.checks.emplace_back("6 (ceil(5n/6) - 3) >= 5 (n - 3)", 6 * (needed - 3) >= 5 * (n - 3));
    out.plan.checks.emplace_back("residual min degree >= 5(n-3)/6",
                                 6 * min_degree_within(host, rest) >= 5 * (n - 3));
  }

  const auto members = bits::to_vector(rest);
  const UndirectedGraph residual = host.induced(members);
  const auto cliques = clique_factor(residual, 6, budget);
  if (!cliques.cliques) {
    out.budget_exhausted = cliques.budget_exhausted;
    out.failure = cliques.budget_exhausted ? "K_6-factor search exhausted its budget" : "no K_6-factor exists";
    out.packing = make_packing(g, PatternDag::transitive(3), std::move(copies));
    return out;
  }
  for (const auto& local : *cliques.cliques) {
    std::vector<int> clique;
    for (int i : local) clique.push_back(members[static_cast<std::size_t>(i)]);
    const auto factor = factor_clique(g, clique, 3);
    if (!factor) throw std::logic_error("oriented K_6 without a TT_3-factor");
    for (const auto& c : *factor) copies.push_back(c);
    record_stage(out.plan, "k6_table_lookup", clique, remaining);
  }
  out.packing = make_packing(g, PatternDag::transitive(3), std::move(copies));
  finish(out, g);
  return out;
}

FactorOutcome h_factor_dense(const OrientedGraph& g, const PatternDag& pattern, int g_h, std::uint64_t budget) {
  const int n = g.n();
  const int h = pattern.size();
  if (h < 1 || n % h != 0) throw InvalidInput("pattern size must divide n");
  if (g_h == 0) {
    if (h == 1) {
      g_h = 1;
    } else if (h == 2 || h == 3) {
      g_h = ramsey::verify_g(h).value;
    } else {
      throw InvalidInput("g(h) is only verified for h <= 3; pass it explicitly");
    }
  }
  if (g_h % h != 0) throw InvalidInput("g_h must be a multiple of the pattern size");

  FactorOutcome out;
  const UndirectedGraph& host = g.host();
  const int delta = host.min_degree();
  // delta >= n (1 - 1/4^h) + 4^h, i.e. 4^h delta >= n (4^h - 1) + 16^h.
  const std::int64_t four_h = std::int64_t{1} << (2 * h);
  const bool theorem = four_h * delta >= static_cast<std::int64_t>(n) * (four_h - 1) + four_h * four_h;
  out.plan.checks.emplace_back("theorem degree condition", theorem);
  if (!theorem) out.warnings.push_back("minimum degree below n(1 - 1/4^h) + 4^h; running the pipeline anyway");

  std::vector<std::vector<int>> copies;
  VertexSet rest = bits::full_set(n);
  int remaining = n;
  const int m = n % g_h;
  if (m > 0) {
    std::optional<std::vector<int>> clique;
    CliqueFinder finder(host, g_h);
    for (int v = 0; v < n && !clique; ++v) {
      VertexSet pool = bits::full_set(n);
      bits::erase(pool, v);
      clique = first_clique(finder, v, pool);
    }
    out.plan.checks.emplace_back("g_h-clique found", clique.has_value());
    if (!clique) {
      out.failure = "no clique on g_h vertices";
      return out;
    }
    const auto factor = factor_clique(g, *clique, h);
    if (!factor) {
      out.failure = "g_h-clique tournament has no TT_h-factor; g_h is wrong";
      return out;
    }
    std::vector<int> peeled;
    for (int i = 0; i < m / h; ++i) {
      const auto& c = (*factor)[static_cast<std::size_t>(i)];
      copies.push_back(c);
      peeled.insert(peeled.end(), c.begin(), c.end());
      for (int v : c) bits::erase(rest, v);
    }
    record_stage(out.plan, "peel_from_clique", std::move(peeled), remaining);
  }

  const auto members = bits::to_vector(rest);
  const int n_rest = static_cast<int>(members.size());
  // delta(G') >= n'(1 - 1/g_h), i.e. g_h delta(G') >= n' (g_h - 1).
  const int delta_rest = min_degree_within(host, rest);
  out.plan.checks.emplace_back("residual min degree >= n'(1 - 1/g_h)",
                               static_cast<std::int64_t>(g_h) * delta_rest >=
                                   static_cast<std::int64_t>(n_rest) * (g_h - 1));

  const UndirectedGraph residual = host.induced(members);
  const auto cliques = clique_factor(residual, g_h, budget);
  if (!cliques.cliques) {
    out.budget_exhausted = cliques.budget_exhausted;
    out.failure = cliques.budget_exhausted ? "clique-factor search exhausted its budget" : "no clique factor exists";
    return out;
  }
  for (const auto& local : *cliques.cliques) {
    std::vector<int> clique;
    for (int i : local) clique.push_back(members[static_cast<std::size_t>(i)]);
    const auto factor = factor_clique(g, clique, h);
    if (!factor) {
      out.failure = "g_h-clique tournament has no TT_h-factor; g_h is wrong";
      return out;
    }
    for (const auto& c : *factor) copies.push_back(c);
    record_stage(out.plan, "clique_factor", clique, remaining);
  }

  std::vector<std::vector<int>> maps;
  for (const auto& c : copies) maps.push_back(pattern_map_from_transitive(pattern, c));
  out.packing = make_packing(g, pattern, std::move(maps));
  finish(out, g);
  return out;
}

}  // namespace ttpack::dense
