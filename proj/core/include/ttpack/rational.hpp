#ifndef TTPACK_RATIONAL_HPP
#define TTPACK_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace ttpack {

using Rational = boost::rational<std::int64_t>;

// Accepts "p/q", integers and finite decimals ("0.05").
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }
Rational pow(Rational base, int exponent);
// True when r is an integer; used for the exact-size constructions.
inline bool is_integral(const Rational& r) { return r.denominator() == 1; }
inline std::int64_t floor(const Rational& r) {
  const auto q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() != 0 && r.numerator() < 0) ? q - 1 : q;
}

}  // namespace ttpack

#endif  // TTPACK_RATIONAL_HPP
