#include "ttpack/canonical.hpp"

#include <algorithm>
#include <cstdio>

#include "ttpack/error.hpp"

namespace ttpack {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// Branch-and-bound over score-respecting vertex orders, building the code one
// column at a time and cutting any branch whose prefix already exceeds the
// best complete code.
class Canonizer {
 public:
  explicit Canonizer(const SmallDigraph& t) : t_(t), n_(t.n()), total_bits_(pair_count(t.n())) {
    std::vector<std::pair<int, int>> keyed;
    for (int v = 0; v < n_; ++v) keyed.emplace_back(bits::count(t.out(v)), v);
    std::sort(keyed.begin(), keyed.end());
    cell_.assign(static_cast<std::size_t>(n_), 0);
    for (int pos = 0; pos < n_; ++pos) {
      const int score = keyed[static_cast<std::size_t>(pos)].first;
      Mask members = 0;
      for (const auto& [s, v] : keyed) {
        if (s == score) bits::insert(members, v);
      }
      cell_[static_cast<std::size_t>(pos)] = members;
    }
    order_.assign(static_cast<std::size_t>(n_), -1);
  }

  CanonicalForm run() {
    if (n_ <= 1) {
      CanonicalForm f{{n_, 0}, {}};
      for (int v = 0; v < n_; ++v) f.order.push_back(v);
      return f;
    }
    descend(0, 0, 0, false);
    return CanonicalForm{{n_, best_}, best_order_};
  }

 private:
  // prefix holds the code bits for columns < pos, right-aligned.
  void descend(int pos, Mask used, std::uint64_t prefix, bool below_best) {
    if (pos == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    const Mask choices = cell_[static_cast<std::size_t>(pos)] & ~used;
    for (int v = bits::first(choices); v >= 0; v = bits::next(choices, v)) {
      std::uint64_t column = 0;
      for (int i = 0; i < pos; ++i) {
        column = (column << 1) | (t_.has_arc(order_[static_cast<std::size_t>(i)], v) ? 1U : 0U);
      }
      const std::uint64_t next = (prefix << pos) | column;
      bool next_below = below_best;
      if (have_best_ && !below_best) {
        const int used_bits = pair_count(pos + 1);
        const std::uint64_t best_prefix = best_ >> (total_bits_ - used_bits);
        if (next > best_prefix) continue;
        next_below = next < best_prefix;
      }
      order_[static_cast<std::size_t>(pos)] = v;
      descend(pos + 1, used | bits::single(v), next, next_below);
    }
  }

  const SmallDigraph& t_;
  int n_;
  int total_bits_;
  std::vector<Mask> cell_;
  std::vector<int> order_;
  std::vector<int> best_order_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

}  // namespace

std::vector<std::uint8_t> CanonicalCode::bytes() const {
  std::vector<std::uint8_t> out;
  out.push_back(static_cast<std::uint8_t>(n));
  for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>((bits >> shift) & 0xFFU));
  return out;
}

std::string CanonicalCode::to_string() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%d:%016llx", n, static_cast<unsigned long long>(bits));
  return buf;
}

CanonicalCode CanonicalCode::parse(const std::string& text) {
  unsigned long long value = 0;
  int n = 0;
  if (std::sscanf(text.c_str(), "%d:%llx", &n, &value) != 2 || n < 0 || n > kMaxCanonicalVertices) {
    throw InvalidInput("bad canonical code '" + text + "'");
  }
  return CanonicalCode{n, value};
}

CanonicalForm canonical_form(const SmallDigraph& t) {
  if (t.n() > kMaxCanonicalVertices) throw InvalidInput("canonical form supports n <= 11");
  if (!t.is_tournament()) throw InvalidInput("canonical form needs a tournament");
  return Canonizer(t).run();
}

SmallDigraph from_code(const CanonicalCode& code) {
  SmallDigraph t(code.n);
  const int total = pair_count(code.n);
  int index = 0;
  for (int j = 1; j < code.n; ++j) {
    for (int i = 0; i < j; ++i, ++index) {
      const bool forward = (code.bits >> (total - 1 - index)) & 1U;
      if (forward) {
        t.add_arc(i, j);
      } else {
        t.add_arc(j, i);
      }
    }
  }
  return t;
}

SmallDigraph apply_order(const SmallDigraph& t, const std::vector<int>& order) {
  return t.induced(order);
}

bool isomorphic(const SmallDigraph& a, const SmallDigraph& b) {
  return a.n() == b.n() && canonical_code(a) == canonical_code(b);
}

}  // namespace ttpack
