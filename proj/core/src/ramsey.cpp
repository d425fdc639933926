#include "ttpack/ramsey.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "ttpack/error.hpp"
#include "ttpack/rng.hpp"

namespace ttpack::ramsey {

namespace {

std::vector<SmallDigraph> extend_classes(const std::vector<SmallDigraph>& parents, int n, int jobs) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(parents.size())));
  std::vector<std::unordered_set<CanonicalCode>> found(static_cast<std::size_t>(workers));
  auto work = [&](int worker) {
    auto& seen = found[static_cast<std::size_t>(worker)];
    for (std::size_t p = static_cast<std::size_t>(worker); p < parents.size(); p += static_cast<std::size_t>(workers)) {
      const SmallDigraph& parent = parents[p];
      for (Mask beats = 0; beats < (Mask{1} << (n - 1)); ++beats) {
        SmallDigraph t(n);
        for (int u = 0; u < n - 1; ++u) {
          bits::for_each(parent.out(u), [&](int v) { t.add_arc(u, v); });
          if (bits::contains(beats, u)) {
            t.add_arc(n - 1, u);
          } else {
            t.add_arc(u, n - 1);
          }
        }
        seen.insert(canonical_code(t));
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }
  std::vector<CanonicalCode> codes;
  for (auto& s : found) codes.insert(codes.end(), s.begin(), s.end());
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<SmallDigraph> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(from_code(c));
  return out;
}

bool every_vertex_in_tt(const SmallDigraph& t, int k, int* bad_vertex) {
  for (int v = 0; v < t.n(); ++v) {
    if (!tt_through_vertex(t, v, k)) {
      if (bad_vertex) *bad_vertex = v;
      return false;
    }
  }
  return true;
}

void scan(SmallDigraph& t, int j, int n, int k, RawScan& out) {
  if (j == n) {
    ++out.tt_free;
    return;
  }
  for (Mask beats = 0; beats < (Mask{1} << j); ++beats) {
    for (int u = 0; u < j; ++u) {
      if (bits::contains(beats, u)) {
        t.add_arc(j, u);
      } else {
        t.add_arc(u, j);
      }
    }
    // A prefix with a TT_k through the new vertex settles all of its extensions.
    if (!tt_through_vertex_within(t, bits::prefix(j + 1), j, k)) scan(t, j + 1, n, k, out);
    for (int u = 0; u < j; ++u) {
      t.remove_arc(j, u);
      t.remove_arc(u, j);
    }
  }
}

bool factor_search(const SmallDigraph& t, Mask remaining, int k, std::vector<TransitiveWitness>& acc) {
  if (remaining == 0) return true;
  const int v = bits::first(remaining);
  std::vector<Mask> through_v;
  for_each_tt_set(t, remaining, k, [&](Mask s) {
    if (bits::contains(s, v)) through_v.push_back(s);
    return true;
  });
  std::sort(through_v.begin(), through_v.end());
  for (Mask s : through_v) {
    acc.push_back(order_transitive_set(t, s));
    if (factor_search(t, remaining & ~s, k, acc)) return true;
    acc.pop_back();
  }
  return false;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace

const std::vector<SmallDigraph>& tournaments(int n, int jobs) {
  if (n < 0) throw InvalidInput("negative n");
  if (n > kMaxEnumerationVertices) {
    throw TooLarge("complete enumeration is limited to n <= 8, got " + std::to_string(n));
  }
  static std::mutex mutex;
  static std::map<int, std::vector<SmallDigraph>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (const auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<SmallDigraph> result;
  if (n <= 1) {
    result.emplace_back(n);
  } else {
    result = extend_classes(tournaments(n - 1, jobs), n, jobs);
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(result)).first->second;
}

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::kF:
      return "f";
    case Quantity::kFStar:
      return "fstar";
    case Quantity::kG:
      return "g";
  }
  return "?";
}

Quantity parse_quantity(const std::string& text) {
  if (text == "f") return Quantity::kF;
  if (text == "fstar" || text == "f_star" || text == "f*") return Quantity::kFStar;
  if (text == "g") return Quantity::kG;
  throw InvalidInput("unknown quantity '" + text + "' (expected f, fstar or g)");
}

RawScan raw_scan(int n, int k) {
  if (n < 0 || n > kMaxCanonicalVertices) throw TooLarge("raw scan supports n <= 11");
  RawScan out;
  const int pairs = n * (n - 1) / 2;
  out.total = std::uint64_t{1} << pairs;
  if (k <= 0) return out;
  SmallDigraph t(n);
  scan(t, 0, n, k, out);
  return out;
}

std::vector<SmallDigraph> tt_free_classes(int n, int k, int jobs) {
  std::vector<SmallDigraph> out;
  for (const auto& t : tournaments(n, jobs)) {
    if (!find_tt(t, k)) out.push_back(t);
  }
  return out;
}

SmallDigraph tt4_free_7() {
  auto classes = tt_free_classes(7, 4);
  if (classes.size() != 1) {
    throw InvalidInput("expected exactly one TT_4-free 7-tournament, found " + std::to_string(classes.size()));
  }
  return classes.front();
}

RamseyVerdict verify_f(int k, int jobs) {
  require(k >= 1 && k <= 5, "verify_f supports k in 1..5");
  RamseyVerdict v;
  v.quantity = Quantity::kF;
  v.k = k;
  if (k == 5) {
    // Only the lower direction is reachable: a 13-vertex TT_5-free witness.
    const auto found = find_tt_free(5, 13);
    if (!found.tournament) throw BudgetExhausted("no TT_5-free 13-vertex tournament found within budget");
    v.lower_witness = *found.tournament;
    v.value = 14;
    v.certified = false;
    v.checks.emplace_back("lower witness re-verified TT_5-free", !find_tt(*v.lower_witness, 5).has_value());
    return v;
  }
  std::vector<SmallDigraph> previous_free;
  for (int n = 1; n <= kMaxEnumerationVertices; ++n) {
    const auto& classes = tournaments(n, jobs);
    std::vector<SmallDigraph> free;
    for (const auto& t : classes) {
      if (!find_tt(t, k)) free.push_back(t);
    }
    if (free.empty()) {
      v.value = n;
      UpperCheck up{n, classes.size(), true, std::nullopt, std::nullopt};
      if (k == 4) {
        const RawScan raw = raw_scan(n, k);
        up.raw_orientations = raw.total;
        up.raw_violations = raw.tt_free;
        up.holds = raw.tt_free == 0;
      }
      v.upper_check = up;
      if (!previous_free.empty()) {
        v.lower_witness = previous_free.front();
        v.lower_classes = previous_free.size();
      }
      v.certified = up.holds && (n == 1 || v.lower_witness.has_value());
      if (v.lower_witness) {
        v.checks.emplace_back("lower witness re-verified TT_k-free", !find_tt(*v.lower_witness, k).has_value());
      }
      return v;
    }
    previous_free = std::move(free);
  }
  throw TooLarge("f(" + std::to_string(k) + ") exceeds the enumeration range");
}

RamseyVerdict verify_f_star(int k, int jobs) {
  require(k >= 1 && k <= 4, "verify_f_star supports k in 1..4");
  RamseyVerdict v;
  v.quantity = Quantity::kFStar;
  v.k = k;
  std::optional<SmallDigraph> witness;
  int witness_vertex = -1;
  std::uint64_t witness_classes = 0;
  for (int n = 1; n <= kMaxEnumerationVertices; ++n) {
    const auto& classes = tournaments(n, jobs);
    std::optional<SmallDigraph> bad;
    int bad_vertex = -1;
    std::uint64_t bad_count = 0;
    for (const auto& t : classes) {
      int vertex = -1;
      if (!every_vertex_in_tt(t, k, &vertex)) {
        if (!bad) {
          bad = t;
          bad_vertex = vertex;
        }
        ++bad_count;
      }
    }
    if (!bad) {
      v.value = n;
      v.upper_check = UpperCheck{n, classes.size(), true, std::nullopt, std::nullopt};
      if (witness) {
        v.lower_witness = witness;
        v.witness_vertex = witness_vertex;
        v.lower_classes = witness_classes;
        v.checks.emplace_back("witness vertex re-verified in no TT_k",
                              !tt_through_vertex(*witness, witness_vertex, k).has_value());
      }
      v.certified = n == 1 || witness.has_value();
      const int f = verify_f(k, jobs).value;
      v.checks.emplace_back("f_star >= f", v.value >= f);
      v.checks.emplace_back("f_star <= 2^(k-1)", v.value <= (1 << (k - 1)));
      return v;
    }
    witness = bad;
    witness_vertex = bad_vertex;
    witness_classes = bad_count;
  }
  throw TooLarge("f*(" + std::to_string(k) + ") exceeds the enumeration range");
}

RamseyVerdict verify_g(int k, int jobs) {
  require(k == 2 || k == 3, "verify_g supports k in {2, 3}");
  RamseyVerdict v;
  v.quantity = Quantity::kG;
  v.k = k;
  std::optional<SmallDigraph> witness;
  std::uint64_t witness_classes = 0;
  for (int n = k; n <= kMaxEnumerationVertices; n += k) {
    const auto& classes = tournaments(n, jobs);
    std::optional<SmallDigraph> bad;
    std::uint64_t bad_count = 0;
    for (const auto& t : classes) {
      if (!tournament_tt_factor(t, k)) {
        if (!bad) bad = t;
        ++bad_count;
      }
    }
    if (!bad) {
      v.value = n;
      v.upper_check = UpperCheck{n, classes.size(), true, std::nullopt, std::nullopt};
      v.lower_witness = witness;
      v.lower_classes = witness_classes;
      v.certified = true;
      if (witness) {
        v.checks.emplace_back("lower witness re-verified without TT_k-factor",
                              !tournament_tt_factor(*witness, k).has_value());
      }
      return v;
    }
    witness = bad;
    witness_classes = bad_count;
  }
  throw TooLarge("g(" + std::to_string(k) + ") exceeds the enumeration range");
}

LocalSearchResult find_tt_free(int k, int n, const LocalSearchParams& params) {
  require(n >= 0 && n <= kMaskBits, "find_tt_free supports n <= 64");
  require(params.restarts >= 1 && params.flips >= 0, "find_tt_free needs restarts >= 1 and flips >= 0");
  LocalSearchResult result;
  SplitMix64 rng(params.seed);
  const std::int64_t per_restart = std::max<std::int64_t>(1, params.flips / params.restarts);
  std::vector<Mask> copies;
  for (int restart = 0; restart < params.restarts; ++restart) {
    ++result.restarts_used;
    SmallDigraph t(n);
    for (int u = 0; u < n; ++u) {
      for (int w = u + 1; w < n; ++w) {
        if (rng.next() & 1U) {
          t.add_arc(u, w);
        } else {
          t.add_arc(w, u);
        }
      }
    }
    for (std::int64_t step = 0;; ++step) {
      copies.clear();
      for_each_tt_set(t, t.vertices(), k, [&](Mask s) {
        copies.push_back(s);
        return true;
      });
      if (copies.empty()) {
        if (!find_tt(t, k)) {
          result.tournament = t;
          return result;
        }
        throw std::logic_error("local search produced an unverified TT_k-free claim");
      }
      if (step >= per_restart || result.flips_used >= params.flips) break;
      const Mask copy = copies[static_cast<std::size_t>(rng.below(copies.size()))];
      const auto members = bits::to_vector(copy);
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) pairs.emplace_back(members[i], members[j]);
      }
      std::pair<int, int> chosen = pairs[static_cast<std::size_t>(rng.below(pairs.size()))];
      if (rng.unit() >= params.noise) {
        std::uint64_t best = ~std::uint64_t{0};
        for (const auto& [a, b] : pairs) {
          t.flip(a, b);
          const std::uint64_t c = count_tt(t, k);
          t.flip(a, b);
          if (c < best) {
            best = c;
            chosen = {a, b};
          }
        }
      }
      t.flip(chosen.first, chosen.second);
      ++result.flips_used;
    }
    if (result.flips_used >= params.flips) break;
  }
  return result;
}

std::optional<std::vector<TransitiveWitness>> tournament_tt_factor(const SmallDigraph& t, int k) {
  if (k <= 0 || t.n() % k != 0) return std::nullopt;
  std::vector<TransitiveWitness> acc;
  if (!factor_search(t, t.vertices(), k, acc)) return std::nullopt;
  return acc;
}

const FactorTable& tt_factor_table(int n, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, FactorTable> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (const auto it = cache.find({n, k}); it != cache.end()) return it->second;
  }
  FactorTable table;
  table.n = n;
  table.k = k;
  for (const auto& t : tournaments(n)) {
    ++table.classes;
    if (auto f = tournament_tt_factor(t, k)) table.entries.emplace(canonical_code(t), std::move(*f));
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::make_pair(n, k), std::move(table)).first->second;
}

std::optional<std::vector<TransitiveWitness>> lookup_tt_factor(const SmallDigraph& t, int k) {
  const CanonicalForm form = canonical_form(t);
  const FactorTable& table = tt_factor_table(t.n(), k);
  const auto it = table.entries.find(form.code);
  if (it == table.entries.end()) return std::nullopt;
  std::vector<TransitiveWitness> mapped;
  for (const auto& w : it->second) {
    TransitiveWitness m;
    for (int pos : w.order) m.order.push_back(form.order[static_cast<std::size_t>(pos)]);
    mapped.push_back(std::move(m));
  }
  return mapped;
}

std::string format_factor_table(const FactorTable& table) {
  std::ostringstream out;
  out << "# TT_" << table.k << "-factors of all " << table.n << "-vertex tournaments (canonical labelling)\n";
  out << "n " << table.n << " k " << table.k << " classes " << table.classes << " factored " << table.entries.size()
      << '\n';
  for (const auto& [code, factor] : table.entries) {
    out << code.to_string();
    for (const auto& w : factor) {
      out << " |";
      for (int v : w.order) out << ' ' << v;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ttpack::ramsey
