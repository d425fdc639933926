#include "ttpack/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "ttpack/error.hpp"
#include "ttpack/ramsey.hpp"
#include "ttpack/rng.hpp"
#include "ttpack/tt_search.hpp"

namespace ttpack::constructions {
namespace {

int exact_size(const Rational& r, const std::string& what) {
  if (!is_integral(r)) throw InvalidInput(what + " = " + to_string(r) + " is not an integer");
  if (r < Rational(1)) throw InvalidInput(what + " must be at least 1");
  return static_cast<int>(r.numerator());
}

// Orients the unordered pairs {a, b} listed in `free_pairs` low -> high, or
// by one SplitMix64 draw each when seeded.
void orient_free_pairs(SmallDigraph& t, const std::vector<std::pair<int, int>>& free_pairs,
                       std::optional<std::uint64_t> seed) {
  SplitMix64 rng(seed.value_or(0));
  for (const auto& [a, b] : free_pairs) {
    if (seed && (rng.next() & 1U) == 0) {
      t.add_arc(b, a);
    } else {
      t.add_arc(a, b);
    }
  }
}

int total(const std::vector<int>& sizes) { return std::accumulate(sizes.begin(), sizes.end(), 0); }

int multipartite_min_degree(const std::vector<int>& sizes) {
  return total(sizes) - *std::max_element(sizes.begin(), sizes.end());
}

SmallDigraph prop2_tournament(std::optional<std::uint64_t> seed) {
  SmallDigraph t(6);
  t.add_arc(4, 5);
  for (int i = 0; i < 4; ++i) {
    t.add_arc(5, i);
    t.add_arc(i, 4);
  }
  std::vector<std::pair<int, int>> free_pairs;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) free_pairs.emplace_back(i, j);
  }
  orient_free_pairs(t, free_pairs, seed);
  return t;
}

void check_sizes(const std::vector<int>& sizes, std::size_t count) {
  if (sizes.size() != count) throw InvalidInput("expected " + std::to_string(count) + " class sizes");
  for (int s : sizes) {
    if (s < 1) throw InvalidInput("class sizes must be positive");
  }
}

const char* rule_name(packing::MarkedRule rule) {
  switch (rule) {
    case packing::MarkedRule::kAtMostOneMarked:
      return "at_most_one_marked";
    case packing::MarkedRule::kAtLeastOneMarked:
      return "at_least_one_marked";
    case packing::MarkedRule::kAuto:
      break;
  }
  return "auto";
}

packing::MarkedRule parse_rule(const std::string& name) {
  if (name == "at_most_one_marked") return packing::MarkedRule::kAtMostOneMarked;
  if (name == "at_least_one_marked") return packing::MarkedRule::kAtLeastOneMarked;
  if (name == "auto") return packing::MarkedRule::kAuto;
  throw InvalidInput("unknown marked rule '" + name + "'");
}

}  // namespace

bool ConstructionOutput::claims_consistent() const {
  const std::int64_t implied = static_cast<std::int64_t>(host.n()) - pattern.size() * claimed_packing_upper;
  return std::max<std::int64_t>(0, implied) >= claimed_uncovered_lower;
}

ConstructionOutput prop2_graph_sizes(const std::vector<int>& sizes, std::optional<std::uint64_t> seed) {
  check_sizes(sizes, 6);
  ConstructionOutput out;
  out.which = "prop2";
  out.description = "complete 6-partite host oriented by a 6-tournament whose triangles through classes 5 and 6 "
                    "are cyclic";
  out.host = blowup(prop2_tournament(seed), sizes);
  out.pattern = PatternDag::transitive(3);
  out.claimed_packing_upper = (sizes[0] + sizes[1] + sizes[2] + sizes[3]) / 2;
  out.claimed_uncovered_lower = std::max<std::int64_t>(0, out.host.n() - 3 * out.claimed_packing_upper);
  out.claimed_min_degree = multipartite_min_degree(sizes);
  out.marked_classes = {4, 5};
  out.rule = packing::MarkedRule::kAtMostOneMarked;
  return out;
}

ConstructionOutput prop2_graph(int n, const Rational& gamma, std::optional<std::uint64_t> seed) {
  if (n < 1) throw InvalidInput("n must be positive");
  if (gamma <= Rational(0) || gamma >= Rational(1, 30)) throw InvalidInput("gamma must lie in (0, 1/30)");
  const Rational alpha = gamma + Rational(1, 6);
  const int big = exact_size(alpha * n, "alpha n");
  const int small = exact_size((1 - 5 * alpha) * n, "(1 - 5 alpha) n");
  ConstructionOutput out = prop2_graph_sizes({small, big, big, big, big, big}, seed);
  // n/3 - gamma n, which equals (|V_1| + ... + |V_4|) / 2.
  const Rational claim = Rational(n, 3) - gamma * n;
  out.claimed_packing_upper = floor(claim);
  out.claimed_uncovered_lower = out.host.n() - 3 * out.claimed_packing_upper;
  out.claimed_min_degree = static_cast<int>(floor((Rational(5, 6) - gamma) * n));
  return out;
}

ConstructionOutput star_example(int m, int h, const Rational& alpha) {
  if (m < 1 || h < 1) throw InvalidInput("m and h must be positive");
  if (alpha < Rational(0) || alpha >= Rational(1)) throw InvalidInput("alpha must lie in [0, 1)");
  const Rational ah = alpha * h;
  if (!is_integral(ah)) throw InvalidInput("alpha h = " + to_string(ah) + " is not an integer");
  const int extra = static_cast<int>(ah.numerator());
  std::vector<int> sizes{h + extra, h - extra};
  for (int i = 2; i <= m; ++i) sizes.push_back(h);

  SmallDigraph order(static_cast<int>(sizes.size()));
  for (int a = 0; a < order.n(); ++a) {
    for (int b = a + 1; b < order.n(); ++b) order.add_arc(a, b);
  }
  ConstructionOutput out;
  out.which = "star";
  out.description = "complete (m+1)-partite host oriented from lower to higher classes; the enlarged first class "
                    "can only host roots";
  out.host = blowup(order, sizes);
  out.pattern = PatternDag::out_star(m);
  // Each copy takes m leaves, all outside the first class.
  out.claimed_packing_upper = (out.host.n() - sizes[0]) / m;
  out.claimed_uncovered_lower = extra;
  out.claimed_min_degree = multipartite_min_degree(sizes);
  out.marked_classes = {0};
  out.rule = packing::MarkedRule::kAtMostOneMarked;
  return out;
}

ConstructionOutput f_blowup(const SmallDigraph& tt_free, int k, int class_size) {
  if (class_size < 1) throw InvalidInput("class size must be positive");
  if (!tt_free.is_tournament()) throw InvalidInput("blow-up base must be a tournament");
  if (find_tt(tt_free, k)) throw InvalidInput("blow-up base contains TT_" + std::to_string(k));
  ConstructionOutput out;
  out.which = "fblowup";
  out.description = "uniform blow-up of a TT_" + std::to_string(k) + "-free tournament on " +
                    std::to_string(tt_free.n()) + " vertices";
  out.host = blowup(tt_free, std::vector<int>(static_cast<std::size_t>(tt_free.n()), class_size));
  out.pattern = PatternDag::transitive(k);
  out.claimed_packing_upper = 0;
  out.claimed_uncovered_lower = out.host.n();
  out.claimed_min_degree = out.host.n() - class_size;
  out.marked_classes.resize(static_cast<std::size_t>(tt_free.n()));
  std::iota(out.marked_classes.begin(), out.marked_classes.end(), 0);
  out.rule = packing::MarkedRule::kAuto;
  return out;
}

ConstructionOutput f_blowup(int k, int class_size) {
  if (k < 2 || k > 5) throw InvalidInput("no verified TT_k-free witness for k = " + std::to_string(k));
  const auto verdict = ramsey::verify_f(k);
  if (!verdict.lower_witness) throw InvalidInput("no witness available for k = " + std::to_string(k));
  return f_blowup(*verdict.lower_witness, k, class_size);
}

ConstructionOutput tt4_lower_sizes(const std::vector<int>& sizes, std::optional<std::uint64_t> seed) {
  check_sizes(sizes, 10);
  const SmallDigraph core = ramsey::tt4_free_7();
  SmallDigraph t(10);
  for (int u = 0; u < 7; ++u) {
    bits::for_each(core.out(u), [&](int v) { t.add_arc(u, v); });
  }
  std::vector<std::pair<int, int>> free_pairs;
  for (int a = 0; a < 10; ++a) {
    for (int b = std::max(a + 1, 7); b < 10; ++b) free_pairs.emplace_back(a, b);
  }
  orient_free_pairs(t, free_pairs, seed);

  ConstructionOutput out;
  out.which = "tt4";
  out.description = "10-partite host: seven classes oriented by the TT_4-free 7-tournament plus three small classes "
                    "every TT_4 must meet";
  out.host = blowup(t, sizes);
  out.pattern = PatternDag::transitive(4);
  out.claimed_packing_upper = sizes[7] + sizes[8] + sizes[9];
  out.claimed_uncovered_lower = std::max<std::int64_t>(0, out.host.n() - 4 * out.claimed_packing_upper);
  out.claimed_min_degree = multipartite_min_degree(sizes);
  out.marked_classes = {7, 8, 9};
  out.rule = packing::MarkedRule::kAtLeastOneMarked;
  return out;
}

ConstructionOutput tt4_lower(int n, const Rational& gamma, std::optional<std::uint64_t> seed) {
  if (n < 1) throw InvalidInput("n must be positive");
  if (gamma <= Rational(0) || gamma >= Rational(1, 3)) throw InvalidInput("gamma must lie in (0, 1/3)");
  const int big = exact_size((1 + gamma) * 3 * n / 28, "(1 + gamma) 3n/28");
  const int small = exact_size((1 - 3 * gamma) * n / 12, "(1 - 3 gamma) n/12");
  std::vector<int> sizes(7, big);
  sizes.insert(sizes.end(), 3, small);
  if (total(sizes) != n) throw InvalidInput("class sizes do not add up to n");
  ConstructionOutput out = tt4_lower_sizes(sizes, seed);
  out.claimed_packing_upper = floor((1 - 3 * gamma) * n / 4);
  out.claimed_uncovered_lower = -floor(-(3 * gamma * n));
  out.claimed_min_degree = static_cast<int>(floor((25 - 3 * gamma) * n / 28));
  return out;
}

ConstructionCheck verify_construction(const ConstructionOutput& c, int exact_limit) {
  ConstructionCheck check;
  check.min_degree = c.host.graph().host().min_degree();
  check.min_degree_matches = check.min_degree == c.claimed_min_degree;
  check.structural = packing::structural_upper_bound(c.host, c.pattern, c.marked_classes, c.rule);
  check.structural_confirms = check.structural.bound <= c.claimed_packing_upper;
  if (c.host.n() <= exact_limit) {
    check.exact = packing::max_packing(c.host.graph(), c.pattern, packing::Mode::kExact);
    check.exact_confirms = static_cast<std::int64_t>(check.exact->upper) <= c.claimed_packing_upper;
  }
  check.claims_consistent = c.claims_consistent();
  return check;
}

Json to_json(const ConstructionOutput& c) {
  Json j;
  j["which"] = c.which;
  j["description"] = c.description;
  j["graph"] = graph_json(c.host);
  j["pattern"] = c.pattern.name();
  j["claimed_packing_upper"] = c.claimed_packing_upper;
  j["claimed_uncovered_lower"] = c.claimed_uncovered_lower;
  j["claimed_min_degree"] = c.claimed_min_degree;
  j["marked_classes"] = c.marked_classes;
  j["rule"] = rule_name(c.rule);
  return j;
}

ConstructionOutput construction_from_json(const Json& j) {
  try {
    ConstructionOutput c;
    c.which = j.at("which").get<std::string>();
    c.description = j.value("description", "");
    const Json& g = j.at("graph");
    std::vector<Arc> arcs;
    for (const auto& a : g.at("arcs")) arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    auto graph = OrientedGraph::from_arcs(g.at("n").get<int>(), arcs);
    c.host = PartitionedHost(std::move(graph), g.at("classes").get<std::vector<std::vector<int>>>());
    c.pattern = PatternDag::parse(j.at("pattern").get<std::string>());
    c.claimed_packing_upper = j.at("claimed_packing_upper").get<std::int64_t>();
    c.claimed_uncovered_lower = j.at("claimed_uncovered_lower").get<std::int64_t>();
    c.claimed_min_degree = j.at("claimed_min_degree").get<int>();
    c.marked_classes = j.at("marked_classes").get<std::vector<int>>();
    c.rule = parse_rule(j.at("rule").get<std::string>());
    return c;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed construction JSON: ") + e.what());
  }
}

Json to_json(const ConstructionCheck& check) {
  Json j;
  j["min_degree"] = check.min_degree;
  j["min_degree_matches"] = check.min_degree_matches;
  j["structural_bound"] = check.structural.bound;
  j["structural_rule"] = check.structural.rule;
  j["structural_confirms"] = check.structural_confirms;
  if (check.exact) {
    j["exact"] = {{"lower", check.exact->lower}, {"upper", check.exact->upper}, {"optimal", check.exact->optimal}};
  } else {
    j["exact"] = nullptr;
  }
  j["exact_confirms"] = check.exact_confirms;
  j["claims_consistent"] = check.claims_consistent;
  j["ok"] = check.ok();
  return j;
}

}  // namespace ttpack::constructions
