#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "knotob/errors.hpp"

namespace knotob {

using Integer = boost::multiprecision::cpp_int;
// Always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

/// "num/den", or just "num" when the value is an integer.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

namespace detail {

inline Integer parse_integer(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw SyntaxError("expected digits in '" + std::string(s) + "'");
  Integer v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw SyntaxError("bad digit in '" + std::string(s) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Integer(-v) : v;
}

}  // namespace detail

/// Accepts "n" or "n/d" with an optional sign on the numerator.
inline Rational parse_rational(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(s));
  Integer num = detail::parse_integer(s.substr(0, slash));
  Integer den = detail::parse_integer(s.substr(slash + 1));
  if (den == 0) throw SyntaxError("zero denominator in '" + std::string(s) + "'");
  // Boost 1.74's rational_adaptor rejects a negative denominator in the two-argument constructor.
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// Euclidean remainder in [0, modulus) for an integral rational.
inline std::int64_t mod_nonneg(const Rational& r, std::int64_t modulus) {
  Integer m = numerator_of(r) % modulus;
  if (m < 0) m += modulus;
  return m.convert_to<std::int64_t>();
}

}  // namespace knotob
