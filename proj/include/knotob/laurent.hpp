#pragma once

#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "knotob/errors.hpp"
#include "knotob/rational.hpp"

namespace knotob {

/// Laurent polynomial in one variable with exact rational coefficients.
///
/// Terms live in an ordered exponent -> coefficient map and zero coefficients are never
/// stored, so structural equality is polynomial equality. The variable name only matters
/// for rendering; the bracket uses `A`, everything else uses `t`.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using TermMap = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const Exponent, Rational>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static LaurentPoly constant(const Rational& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const Rational& c, Exponent e) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }
  static LaurentPoly variable() { return monomial(1, 1); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

  // Only meaningful for nonzero polynomials.
  Exponent min_exponent() const { return terms_.begin()->first; }
  Exponent max_exponent() const { return terms_.rbegin()->first; }

  Rational coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(Exponent e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplies by x^k.
  LaurentPoly shifted(Exponent k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  /// p(x) -> p(x^-1).
  LaurentPoly inverted() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly r = constant(1);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

 private:
  TermMap terms_;
};

inline Rational rational_pow(const Rational& x, LaurentPoly::Exponent e) {
  Rational base = e < 0 ? Rational(1) / x : x;
  auto k = e < 0 ? -e : e;
  Rational r = 1;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

inline Rational evaluate(const LaurentPoly& p, const Rational& x) {
  if (x == 0) {
    if (p.is_zero()) return 0;
    if (p.min_exponent() < 0) throw DivisionByZero("cannot evaluate a Laurent polynomial with negative exponents at 0");
  }
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c * rational_pow(x, e);
  return sum;
}

inline LaurentPoly derivative(const LaurentPoly& p, unsigned order = 1) {
  LaurentPoly cur = p;
  for (unsigned k = 0; k < order; ++k) {
    LaurentPoly next;
    for (const auto& [e, c] : cur.terms()) next.add_term(e - 1, c * e);
    cur = std::move(next);
  }
  return cur;
}

inline bool is_symmetric(const LaurentPoly& p) {
  for (const auto& [e, c] : p.terms())
    if (p.coefficient(-e) != c) return false;
  return true;
}

/// Picks the associate +-t^k p that is palindromic and takes the value 1 at t = 1.
inline LaurentPoly alexander_normalize(const LaurentPoly& p) {
  if (p.is_zero()) throw NonNormalizable("zero polynomial has no normalized associate");
  Rational at_one = evaluate(p, 1);
  if (at_one == 0) throw NonNormalizable("polynomial vanishes at t = 1");
  auto span = p.min_exponent() + p.max_exponent();
  if (span % 2 != 0) throw NonNormalizable("odd exponent span; no symmetric associate");
  LaurentPoly r = p.shifted(-span / 2);
  if (at_one < 0) r = -r;
  if (!is_symmetric(r) || evaluate(r, 1) != 1)
    throw NonNormalizable("no associate is symmetric with value 1 at t = 1");
  return r;
}

/// Renders descending terms as `c*t^e`, e.g. `-1/12*t^2 + 1`.
inline std::string to_string(const LaurentPoly& p, char var = 't') {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto [e, c] = *it;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

/// Parses the grammar produced by to_string: signed terms `[coef][*]var[^exp]` or bare
/// rationals. Whitespace is ignored.
inline LaurentPoly parse_laurent(std::string_view text, char var = 't') {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw SyntaxError("empty polynomial");

  LaurentPoly result;
  std::size_t i = 0;
  auto read_digits = [&](std::string& into) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) into += s[i++];
  };
  bool first = true;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    } else if (!first) {
      throw SyntaxError("expected '+' or '-' at position " + std::to_string(i) + " in '" + s + "'");
    }
    first = false;

    Rational coef = 1;
    std::string num;
    read_digits(num);
    if (!num.empty()) {
      if (i < s.size() && s[i] == '/') {
        ++i;
        std::string den;
        read_digits(den);
        if (den.empty()) throw SyntaxError("missing denominator in '" + s + "'");
        coef = parse_rational(num + "/" + den);
      } else {
        coef = parse_rational(num);
      }
    }

    LaurentPoly::Exponent exp = 0;
    bool has_var = false;
    if (i < s.size() && s[i] == '*') {
      if (num.empty()) throw SyntaxError("'*' without coefficient in '" + s + "'");
      ++i;
      if (i >= s.size() || s[i] != var) throw SyntaxError("expected variable after '*' in '" + s + "'");
    }
    if (i < s.size() && s[i] == var) {
      has_var = true;
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string es;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) es += s[i++];
        read_digits(es);
        if (es.empty() || es == "-" || es == "+") throw SyntaxError("bad exponent in '" + s + "'");
        exp = std::stoll(es);
      }
    }
    if (num.empty() && !has_var) throw SyntaxError("empty term in '" + s + "'");
    result.add_term(exp, neg ? Rational(-coef) : coef);
  }
  return result;
}

}  // namespace knotob
