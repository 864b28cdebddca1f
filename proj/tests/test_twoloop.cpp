#include <gtest/gtest.h>

#include <random>

#include "knotob/twoloop.hpp"

using namespace knotob;

namespace {

const LaurentPoly zero;

LaurentPoly sym(const Rational& outer, const Rational& middle) { return LaurentPoly{{1, outer}, {0, middle}, {-1, outer}}; }

}  // namespace

TEST(TwoLoop, Examples) {
  EXPECT_EQ(reduced_two_loop({0, 0, 0, 1}, {}), zero);
  EXPECT_EQ(reduced_two_loop({0, 0, 0, 1}, {0, 0, 0, 1}), sym(-4, -28));
  EXPECT_EQ(reduced_two_loop({0, 0, -1, 1}, {0, 0, 1, 0}), LaurentPoly::constant(-2));
  EXPECT_EQ(two_loop_g(0), sym(Rational(-1, 3), Rational(-4, 3)));
}

TEST(TwoLoop, SymmetricRandomized) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::int64_t> small(-10, 10), inv(-20, 20);
  for (int i = 0; i < 500; ++i) {
    GenusOneSpine s{small(rng), small(rng), small(rng), (rng() & 1U) ? 1 : -1};
    TangleInvariants ti{inv(rng), inv(rng), inv(rng), inv(rng)};
    EXPECT_TRUE(is_symmetric(reduced_two_loop(s, ti)));
  }
}

TEST(TwoLoop, NegativeEpsIsTransposedSpine) {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<std::int64_t> small(-10, 10), inv(-20, 20);
  for (int i = 0; i < 200; ++i) {
    std::int64_t n = small(rng), m = small(rng), ell = small(rng);
    TangleInvariants ti{inv(rng), inv(rng), inv(rng), inv(rng)};
    EXPECT_EQ(reduced_two_loop({n, m, ell, -1}, ti), reduced_two_loop({n, m, ell - 1, 1}, ti));
  }
}

TEST(FramingDifference, Examples) {
  for (std::int64_t n = -5; n <= 5; ++n)
    for (std::int64_t ell : {0, -1})
      for (int sign : {1, -1}) EXPECT_EQ(framing_difference({n, 0, ell, 1}, {4, 0, -3, 2}, sign), zero);

  GenusOneSpine s{1, 0, -2, 1};
  ASSERT_EQ(s.d(), -2);
  LaurentPoly expected = two_loop_g(-2) * Rational(-2);
  EXPECT_EQ(framing_difference(s, {}, -1), expected);
  EXPECT_EQ(framing_difference_closed_form(s, {}, -1), expected);

  EXPECT_EQ(framing_difference({0, 0, 0, 1}, {0, 1, 0, 0}, 1), LaurentPoly::constant(4));
}

TEST(FramingDifference, NeedsMZero) {
  EXPECT_THROW(framing_difference({0, 1, 0, 1}, {}, 1), PreconditionViolation);
}

TEST(FramingDifference, MatchesClosedForm) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<std::int64_t> inv(-20, 20);
  for (std::int64_t n = -10; n <= 10; ++n)
    for (std::int64_t ell = -10; ell <= 10; ++ell)
      for (int sign : {1, -1}) {
        GenusOneSpine s{n, 0, ell, (rng() & 1U) ? 1 : -1};
        TangleInvariants ti{inv(rng), inv(rng), inv(rng), inv(rng)};
        ASSERT_EQ(framing_difference(s, ti, sign), framing_difference_closed_form(s, ti, sign))
            << n << ' ' << ell << ' ' << sign;
      }
}

TEST(Constraints, IntegerSolutions) {
  using Set = std::set<std::pair<std::int64_t, std::int64_t>>;
  for (std::int64_t range : {1, 5, 50}) EXPECT_EQ(constraint_solutions(range), (Set{{0, 0}}));
}

TEST(Constraints, ResidualsAtQuarter) {
  auto [a, b] = constraint_residuals(Rational(1, 4), Rational(-1, 8));
  EXPECT_EQ(a, 0);
  EXPECT_EQ(b, 0);
}

TEST(Constraints, RationalRoots) {
  auto roots = constraint_rational_roots();
  ASSERT_EQ(roots.size(), 2U);
  EXPECT_EQ(roots[0].d, 0);
  EXPECT_EQ(roots[0].v2yy, 0);
  EXPECT_TRUE(roots[0].integral);
  EXPECT_EQ(roots[1].d, Rational(1, 4));
  EXPECT_EQ(roots[1].v2yy, Rational(-1, 8));
  EXPECT_FALSE(roots[1].integral);
}

TEST(RationalRoots, Polynomials) {
  // (2x - 1)(x + 3) x = 2x^3 + 5x^2 - 3x
  auto roots = detail::rational_roots(LaurentPoly{{3, 2}, {2, 5}, {1, -3}});
  EXPECT_EQ(roots, (std::vector<Rational>{-3, 0, Rational(1, 2)}));
  EXPECT_TRUE(detail::rational_roots(LaurentPoly{{2, 1}, {0, 1}}).empty());
}

TEST(ThetaIdentity, Examples) {
  EXPECT_EQ(theta_difference_identity({5, 0, 0, 1}, {0, 0, 0, 1}), 16);
  EXPECT_EQ(theta_difference_identity({-3, 0, -1, 1}, {7, 0, 13, -2}), -32);
  EXPECT_EQ(theta_difference_identity({4, 0, 0, -1}, {}), 0);
  EXPECT_THROW(theta_difference_identity({1, 1, 0, 1}, {}), PreconditionViolation);
  EXPECT_THROW(theta_difference_identity({1, 0, 1, 1}, {}), PreconditionViolation);
  EXPECT_EQ(theta_difference_identity({2, 0, 1, -1}, {0, 0, 0, 1}), 16);
  EXPECT_THROW(theta_difference_identity({2, 0, -1, -1}, {}), PreconditionViolation);
}

TEST(ThetaIdentity, Randomized) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> inv(-20, 20), framing(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    int eps = (rng() & 1U) ? 1 : -1;
    std::int64_t ell = ((rng() & 1U) ? 0 : -1) + (eps < 0 ? 1 : 0);
    GenusOneSpine s{framing(rng), 0, ell, eps};
    TangleInvariants ti{inv(rng), inv(rng), inv(rng), inv(rng)};
    ASSERT_EQ(theta_difference_identity(s, ti), 16 * ti.v3);
  }
}
