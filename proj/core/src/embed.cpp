#include "ttpack/embed.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "ttpack/error.hpp"

namespace ttpack::embed {
namespace {

using Big = boost::multiprecision::cpp_rational;

Big big(const Rational& r) { return Big(r.numerator()) / Big(r.denominator()); }

Big big_pow(const Big& base, int exponent) {
  Big out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

double to_double(const Big& x) { return x.convert_to<double>(); }

InequalityCheck compare(const Big& lhs, const Big& rhs) {
  InequalityCheck c;
  c.holds = lhs < rhs;
  c.lhs = to_double(lhs);
  c.rhs = to_double(rhs);
  c.exact = lhs.str() + (c.holds ? " < " : " >= ") + rhs.str();
  return c;
}

void check_params(const EmbedParams& p) {
  if (p.h < 1 || p.k < 1) throw InvalidInput("h and k must be positive");
  if (p.eta <= Rational(0)) throw InvalidInput("eta must be positive");
  if (p.mu < Rational(0)) throw InvalidInput("mu must be non-negative");
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

VertexSet to_set(int n, const std::vector<int>& vs) { return bits::make_set(n, vs); }

class Violations {
 public:
  explicit Violations(Policy policy) : policy_(policy) {}
  void add(const std::string& what) {
    if (policy_ == Policy::kStrict) throw InvalidInput(what);
    list_.push_back(what);
  }
  std::vector<std::string> take() { return std::move(list_); }

 private:
  Policy policy_;
  std::vector<std::string> list_;
};

// The algorithm itself, on classes already known to be layered.
EmbedResult run_embedding(const OrientedGraph& g, const std::vector<std::vector<int>>& classes,
                          const EmbedParams& params, int w) {
  const int n = g.n();
  const int k = static_cast<int>(classes.size());
  const int h = params.h;
  const Rational keep = params.eta / 2 - params.mu;
  const Big ratio = big(params.eta) / 4;

  std::vector<VertexSet> b_set;
  for (const auto& c : classes) b_set.push_back(to_set(n, c));
  std::vector<std::vector<int>> a(static_cast<std::size_t>(k));

  EmbedResult result;
  for (int p = 0; p < k; ++p) {
    const auto pu = static_cast<std::size_t>(p);
    for (int q = 1; q <= h; ++q) {
      VertexSet d = b_set[pu];
      for (int v : a[pu]) bits::erase(d, v);
      int chosen = -1;
      for (int v = bits::first(d); v >= 0 && chosen < 0; v = bits::next(d, v)) {
        bool ok = true;
        for (int j = p + 1; j < k && ok; ++j) {
          const auto& bj = b_set[static_cast<std::size_t>(j)];
          const auto deg = static_cast<std::int64_t>((g.out(v) & bj).count());
          ok = Rational(deg) >= keep * static_cast<std::int64_t>(bj.count());
        }
        if (ok) chosen = v;
      }
      if (chosen < 0) {
        result.failure = EmbedFailure{p + 1, q,
                                      d.none() ? "B_p exhausted"
                                               : "every candidate has too few out-neighbours in a later B_j"};
        return result;
      }
      a[pu].push_back(chosen);
      for (int j = p + 1; j < k; ++j) b_set[static_cast<std::size_t>(j)] &= g.out(chosen);

      StepTrace step;
      step.p = p + 1;
      step.q = q;
      for (int i = 0; i < k; ++i) {
        const auto size = static_cast<int>(b_set[static_cast<std::size_t>(i)].count());
        step.b_sizes.push_back(size);
        const int exponent = i <= p ? i * h : p * h + q;
        if (Big(size) < big_pow(ratio, exponent) * w) step.bounds_hold = false;
      }
      if (!step.bounds_hold) ++result.bound_violations;
      result.trace.push_back(std::move(step));
    }
  }
  result.success = true;
  result.parts = std::move(a);
  return result;
}

}  // namespace

Rational density(const OrientedGraph& g, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() || b.empty()) throw InvalidInput("density needs non-empty sides");
  const VertexSet bs = to_set(g.n(), b);
  for (int v : a) {
    if (bits::contains(bs, v)) throw InvalidInput("density sides must be disjoint");
  }
  std::int64_t arcs = 0;
  for (int v : a) arcs += static_cast<std::int64_t>((g.out(v) & bs).count());
  return Rational(arcs, static_cast<std::int64_t>(a.size()) * static_cast<std::int64_t>(b.size()));
}

InequalityCheck embedding_inequality(const EmbedParams& p) {
  check_params(p);
  if (p.w < 1) throw InvalidInput("w must be positive");
  const Big lhs = Big(p.k - 1) * big(p.mu) + Big(p.h - 1) / Big(p.w);
  return compare(lhs, big_pow(big(p.eta) / 4, p.h * p.k));
}

InequalityCheck packing_inequality(const EmbedParams& p, int b) {
  check_params(p);
  if (b < 1 || p.mu <= Rational(0)) throw InvalidInput("b and mu must be positive");
  const Big lhs = Big(p.k - 1) * big(p.mu) + Big(p.h - 1) / (big(p.mu) * b);
  return compare(lhs, big_pow(big(p.eta) / 4, p.h * p.k));
}

LayeredInstance::LayeredInstance(OrientedGraph graph, std::vector<std::vector<int>> classes)
    : graph_(std::move(graph)), classes_(std::move(classes)) {
  const int n = graph_.n();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    for (int v : classes_[i]) {
      if (v < 0 || v >= n) throw InvalidInput("class vertex out of range");
      if (index[static_cast<std::size_t>(v)] >= 0) throw InvalidInput("classes overlap");
      index[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (const auto& [u, v] : graph_.arcs()) {
    const int cu = index[static_cast<std::size_t>(u)];
    const int cv = index[static_cast<std::size_t>(v)];
    if (cu >= 0 && cv >= 0 && cu > cv) {
      throw InvalidInput("arc " + std::to_string(u) + "->" + std::to_string(v) + " points to an earlier class");
    }
  }
}

OrientedGraph drop_backward_arcs(const OrientedGraph& g, const std::vector<std::vector<int>>& classes) {
  std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (int v : classes[i]) index.at(static_cast<std::size_t>(v)) = static_cast<int>(i);
  }
  std::vector<Arc> kept;
  for (const auto& [u, v] : g.arcs()) {
    const int cu = index[static_cast<std::size_t>(u)];
    const int cv = index[static_cast<std::size_t>(v)];
    if (cu >= 0 && cv >= 0 && cu > cv) continue;
    kept.emplace_back(u, v);
  }
  return OrientedGraph::from_arcs(g.n(), kept);
}

std::vector<int> EmbedResult::embedding() const {
  std::vector<int> map;
  for (const auto& part : parts) map.insert(map.end(), part.begin(), part.end());
  return map;
}

EmbedResult embed_tthk(const LayeredInstance& inst, const EmbedParams& params, Policy policy) {
  check_params(params);
  if (inst.k() != params.k) throw InvalidInput("instance has " + std::to_string(inst.k()) + " classes, k = " +
                                               std::to_string(params.k));
  Violations violations(policy);
  const auto& classes = inst.classes();
  const int w = params.w != 0 ? params.w : static_cast<int>(classes.front().size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (static_cast<int>(classes[i].size()) != w) {
      violations.add("|W_" + std::to_string(i + 1) + "| = " + std::to_string(classes[i].size()) +
                     " differs from w = " + std::to_string(w));
    }
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (classes[i].empty() || classes[j].empty()) continue;
      const Rational d = density(inst.graph(), classes[i], classes[j]);
      if (d < params.eta / 2) {
        violations.add("d(W_" + std::to_string(i + 1) + ", W_" + std::to_string(j + 1) + ") = " + to_string(d) +
                       " < eta/2");
      }
    }
  }
  EmbedParams with_w = params;
  with_w.w = std::max(w, 1);
  if (const auto ineq = embedding_inequality(with_w); !ineq.holds) {
    violations.add("embedding inequality fails: " + ineq.exact);
  }
  EmbedResult result = run_embedding(inst.graph(), classes, params, w);
  result.precondition_violations = violations.take();
  return result;
}

GreedyResult greedy_pack_tthk(const OrientedGraph& g, const std::vector<std::vector<int>>& classes,
                              const EmbedParams& params, int b, Policy policy) {
  check_params(params);
  if (static_cast<int>(classes.size()) != params.k) throw InvalidInput("class count differs from k");
  if (b < 1) throw InvalidInput("b must be positive");
  for (const auto& c : classes) {
    if (static_cast<int>(c.size()) != b && static_cast<int>(c.size()) != b + 1) {
      throw InvalidInput("class sizes must be b or b + 1");
    }
  }
  const LayeredInstance checked(g, classes);

  Violations violations(policy);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      const Rational d = density(g, classes[i], classes[j]);
      if (d < params.mu + params.eta / 2) {
        violations.add("d(V_" + std::to_string(i + 1) + ", V_" + std::to_string(j + 1) + ") = " + to_string(d) +
                       " < mu + eta/2");
      }
    }
  }
  if (const auto ineq = packing_inequality(params, b); !ineq.holds) {
    violations.add("packing inequality fails: " + ineq.exact);
  }

  const int h = params.h;
  std::vector<std::vector<int>> pools;
  for (const auto& c : classes) pools.push_back(sorted(c));
  const Rational floor_size = 2 * params.mu * b;

  GreedyResult result;
  result.target = (1 - 2 * params.mu) * b / h;
  std::vector<std::vector<int>> embeddings;
  std::vector<bool> used(static_cast<std::size_t>(g.n()), false);
  while (true) {
    const int w = b - h * static_cast<int>(embeddings.size());
    result.final_working_size = w;
    if (w < 1 || Rational(w) < floor_size) {
      result.stop_reason = "below_threshold";
      break;
    }
    std::vector<std::vector<int>> working;
    for (const auto& pool : pools) {
      std::vector<int> part;
      for (int v : pool) {
        if (static_cast<int>(part.size()) == w) break;
        if (!used[static_cast<std::size_t>(v)]) part.push_back(v);
      }
      working.push_back(std::move(part));
    }
    const EmbedResult step = run_embedding(g, working, params, w);
    if (!step.success) {
      result.stop_reason = "embed_failed";
      result.last_failure = step.failure;
      break;
    }
    for (const auto& part : step.parts) {
      for (int v : part) used[static_cast<std::size_t>(v)] = true;
    }
    embeddings.push_back(step.embedding());
  }
  result.packing = make_packing(g, PatternDag::blowup_transitive(h, params.k), std::move(embeddings));
  result.target_reached = Rational(static_cast<std::int64_t>(result.packing.embeddings.size())) >= result.target;
  result.precondition_violations = violations.take();
  return result;
}

}  // namespace ttpack::embed
