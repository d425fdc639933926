#include "ttpack/rational.hpp"

#include <charconv>

#include "ttpack/error.hpp"

namespace ttpack {

namespace {

std::int64_t to_i64(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidInput("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto den = to_i64(text.substr(slash + 1), text);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return Rational(to_i64(text.substr(0, slash), text), den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 15) throw InvalidInput("too many decimals in '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::int64_t int_part = (whole.empty() || whole == "-") ? 0 : to_i64(whole, text);
    const std::int64_t frac_part = frac.empty() ? 0 : to_i64(frac, text);
    const std::int64_t magnitude = (int_part < 0 ? -int_part : int_part) * scale + frac_part;
    return Rational(negative ? -magnitude : magnitude, scale);
  }
  return Rational(to_i64(text, text));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational pow(Rational base, int exponent) {
  Rational result(1);
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace ttpack
