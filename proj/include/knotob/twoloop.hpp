#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "knotob/errors.hpp"
#include "knotob/laurent.hpp"
#include "knotob/rational.hpp"
#include "knotob/seifert.hpp"

namespace knotob {

/// Framing-independent finite type invariants of the spine tangle. Supplied by the caller.
struct TangleInvariants {
  std::int64_t v2xx = 0;
  std::int64_t v2yy = 0;
  std::int64_t v2xy = 0;
  std::int64_t v3 = 0;

  friend bool operator==(const TangleInvariants&, const TangleInvariants&) = default;
};

/// -2 - ((2d+1)/3)(t + t^-1 - 2)
inline LaurentPoly two_loop_g(const Rational& d) {
  Rational k = (2 * d + 1) / 3;
  return LaurentPoly{{1, -k}, {0, -2 + 2 * k}, {-1, -k}};
}

/// Reduced 2-loop polynomial of a genus-one knot from its spine data:
///
///   F G(t) - 4 H Delta(t)
///   F = (n+m)(d - nm/2) - ell(ell+1/2)(ell+1) + 12 v3
///   H = m v2xx + n v2yy - (ell+1/2) v2xy + 3 v3
///
/// with G as in two_loop_g, Delta = d t + (1-2d) + d t^-1 and ell the canonical linking number.
inline LaurentPoly reduced_two_loop(const GenusOneSpine& s, const TangleInvariants& ti) {
  const Rational n(s.n), m(s.m), ell(s.ell_canonical()), d(s.d());
  const Rational half(1, 2);
  Rational f = (n + m) * (d - n * m / 2) - ell * (ell + half) * (ell + 1) + 12 * Rational(ti.v3);
  Rational h = m * ti.v2xx + n * ti.v2yy - (ell + half) * ti.v2xy + 3 * Rational(ti.v3);
  return two_loop_g(d) * f - alexander_d_form(d) * (4 * h);
}

/// Change of the reduced 2-loop polynomial under the crossing change n -> n + sign.
/// Requires m = 0.
inline LaurentPoly framing_difference(const GenusOneSpine& s, const TangleInvariants& ti, int sign) {
  if (s.m != 0) throw PreconditionViolation("framing difference needs m = 0 (got m = " + std::to_string(s.m) + ")");
  return reduced_two_loop(s, ti) - reduced_two_loop(crossing_change(s, sign), ti);
}

/// -sign [d G(t) - 4 v2yy Delta(t)]
inline LaurentPoly framing_difference_closed_form(const GenusOneSpine& s, const TangleInvariants& ti, int sign) {
  const Rational d(s.d());
  LaurentPoly inner = two_loop_g(d) * d - alexander_d_form(d) * Rational(4 * ti.v2yy);
  return inner * Rational(-sign);
}

/// The two coefficient equations of the framing difference:
///   d(-(2d+1)/3 - 4 v2yy) = 0   (t^{+-1})
///   d(4d-4)/3 + 4 v2yy (2d-1) = 0   (constant term)
inline std::pair<Rational, Rational> constraint_residuals(const Rational& d, const Rational& v2yy) {
  return {d * (-(2 * d + 1) / 3 - 4 * v2yy), d * (4 * d - 4) / 3 + 4 * v2yy * (2 * d - 1)};
}

/// Integer pairs (d, v2yy) in [-range, range]^2 solving both constraint equations.
inline std::set<std::pair<std::int64_t, std::int64_t>> constraint_solutions(std::int64_t range) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t d = -range; d <= range; ++d)
    for (std::int64_t v = -range; v <= range; ++v) {
      auto [r1, r2] = constraint_residuals(d, v);
      if (r1 == 0 && r2 == 0) out.emplace(d, v);
    }
  return out;
}

struct RationalRoot {
  Rational d;
  Rational v2yy;
  bool integral = false;
};

namespace detail {

inline std::vector<Integer> divisors(Integer x) {
  if (x < 0) x = -x;
  std::vector<Integer> out;
  for (Integer k = 1; k * k <= x; ++k)
    if (x % k == 0) {
      out.push_back(k);
      if (k * k != x) out.push_back(x / k);
    }
  return out;
}

/// Rational roots of a polynomial in one variable (nonnegative exponents).
inline std::vector<Rational> rational_roots(LaurentPoly p) {
  std::vector<Rational> roots;
  if (p.is_zero()) return roots;
  if (p.min_exponent() > 0) {
    roots.push_back(0);
    p = p.shifted(-p.min_exponent());
  }
  if (p.max_exponent() == 0) return roots;
  Integer lcm = 1;
  for (const auto& [e, c] : p.terms()) lcm = boost::multiprecision::lcm(lcm, denominator_of(c));
  Integer lead = numerator_of(p.coefficient(p.max_exponent()) * lcm);
  Integer constant = numerator_of(p.coefficient(0) * lcm);
  for (const auto& num : divisors(constant))
    for (const auto& den : divisors(lead))
      for (int sgn : {1, -1}) {
        Rational cand(num * sgn, den);
        if (evaluate(p, cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace detail

/// Solves the constraint system over the rationals. The d = 0 branch forces v2yy = 0; for
/// d != 0 the first equation gives v2yy = -(2d+1)/12, and substituting into the second
/// leaves a polynomial in d whose rational roots are enumerated. Non-integral roots are
/// reported with integral = false.
inline std::vector<RationalRoot> constraint_rational_roots() {
  std::vector<RationalRoot> out;
  {
    // d = 0: second equation reads -4 v2yy = 0.
    RationalRoot r{0, 0, true};
    auto [a, b] = constraint_residuals(r.d, r.v2yy);
    if (a == 0 && b == 0) out.push_back(r);
  }
  const LaurentPoly d = LaurentPoly::variable();
  const LaurentPoly v = LaurentPoly{{1, Rational(-2, 12)}, {0, Rational(-1, 12)}};
  LaurentPoly second = d * (d * Rational(4) - LaurentPoly::constant(4)) * Rational(1, 3) +
                       v * Rational(4) * (d * Rational(2) - LaurentPoly::constant(1));
  for (const auto& root : detail::rational_roots(second)) {
    if (root == 0) continue;
    RationalRoot r{root, -(2 * root + 1) / 12, is_integer(root)};
    auto [a, b] = constraint_residuals(r.d, r.v2yy);
    if (a == 0 && b == 0) out.push_back(r);
  }
  return out;
}

/// Theta(-1) - Theta(1) for a spine with m = 0 and d = 0; equals 16 v3.
inline Rational theta_difference_identity(const GenusOneSpine& s, const TangleInvariants& ti) {
  if (s.m != 0 || s.d() != 0)
    throw PreconditionViolation("the 16 v3 identity needs m = 0 and d = 0 (canonical ell in {0, -1})");
  LaurentPoly theta = reduced_two_loop(s, ti);
  return evaluate(theta, -1) - evaluate(theta, 1);
}

}  // namespace knotob
