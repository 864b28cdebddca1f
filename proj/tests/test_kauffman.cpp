#include <gtest/gtest.h>

#include <map>
#include <set>

#include "knotob/diagram.hpp"
#include "knotob/kauffman.hpp"

using namespace knotob;

namespace {

const char* kTrefoil = "X(1,4,2,5); X(3,6,4,1); X(5,2,6,3)";
const char* kFigureEight = "X(4,2,5,1); X(8,6,1,5); X(6,3,7,4); X(2,7,3,8)";
const char* kFiveTwo = "X(1,4,2,5); X(3,8,4,9); X(5,10,6,1); X(9,6,10,7); X(7,2,8,3)";

const LaurentPoly A = LaurentPoly::variable();
const LaurentPoly delta{{2, -1}, {-2, -1}};

// Skein recursion oracle: resolve one crossing at a time, keeping an explicit arc list,
// and count loops at the leaves by walking the arcs. No union-find, no state words.
using Arcs = std::multimap<int, int>;

int count_loops(const Arcs& arcs) {
  std::map<int, std::vector<int>> adj;
  for (const auto& [a, b] : arcs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::map<int, bool> seen;
  int loops = 0;
  for (const auto& [v, nbrs] : adj) {
    if (seen[v]) continue;
    ++loops;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (seen[x]) continue;
      seen[x] = true;
      for (int y : adj[x]) stack.push_back(y);
    }
  }
  return loops;
}

LaurentPoly skein(const PDCode& pd, std::size_t i, Arcs arcs, bool flip) {
  if (i == pd.crossings.size()) {
    int loops = count_loops(arcs) + pd.free_loops;
    return delta.pow(static_cast<unsigned>(loops - 1));
  }
  const auto& [a, b, c, d] = pd.crossings[i];
  Arcs with_a = arcs, with_b = std::move(arcs);
  if (!flip) {
    with_a.insert({a, d}), with_a.insert({b, c});
    with_b.insert({a, b}), with_b.insert({c, d});
  } else {
    with_a.insert({a, b}), with_a.insert({c, d});
    with_b.insert({a, d}), with_b.insert({b, c});
  }
  return A * skein(pd, i + 1, with_a, flip) + LaurentPoly::monomial(1, -1) * skein(pd, i + 1, with_b, flip);
}

LaurentPoly oracle_bracket(const PDCode& pd, bool flip = false) {
  if (pd.crossings.empty()) return LaurentPoly::constant(1);
  return skein(pd, 0, {}, flip);
}

LaurentPoly invert_variable(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(-e, c);
  return out;
}

std::vector<PretzelParams> odd_triples(std::int64_t max_crossings) {
  std::vector<PretzelParams> out;
  for (std::int64_t p = -11; p <= 11; p += 2)
    for (std::int64_t q = -11; q <= 11; q += 2)
      for (std::int64_t r = -11; r <= 11; r += 2) {
        PretzelParams k(p, q, r);
        if (k.crossing_count() <= max_crossings) out.push_back(k);
      }
  return out;
}

}  // namespace

TEST(Bracket, Unknot) {
  EXPECT_EQ(bracket_brute(parse_pd("")), LaurentPoly::constant(1));
  EXPECT_EQ(jones(parse_pd("")), LaurentPoly::constant(1));
}

TEST(Bracket, Trefoil) {
  PDCode pd = parse_pd(kTrefoil);
  LaurentPoly expected{{5, -1}, {-3, -1}, {-7, 1}};
  EXPECT_EQ(bracket_brute(pd), expected);
  EXPECT_EQ(oracle_bracket(pd), expected);
  EXPECT_EQ(jones(pd), (LaurentPoly{{4, -1}, {3, 1}, {1, 1}}));
}

TEST(Bracket, Kink) {
  PDCode pd = parse_pd("X(1,1,2,2)");
  auto b = bracket_brute(pd);
  ASSERT_EQ(b.terms().size(), 1U);
  EXPECT_EQ(std::abs(b.min_exponent()), 3);
  EXPECT_EQ(abs(b.terms().begin()->second), 1);
  EXPECT_EQ(jones(pd), LaurentPoly::constant(1));
}

TEST(Bracket, FigureEight) {
  PDCode pd = parse_pd(kFigureEight);
  EXPECT_EQ(bracket_brute(pd), oracle_bracket(pd));
  EXPECT_EQ(jones(pd), (LaurentPoly{{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}}));
}

TEST(Bracket, BruteMatchesSkeinOracle) {
  for (const auto& k : odd_triples(9)) {
    PDCode pd = pretzel_pd(k);
    EXPECT_EQ(bracket_brute(pd), oracle_bracket(pd)) << to_string(k);
  }
}

TEST(Bracket, TooLarge) {
  BracketOptions o;
  o.max_crossings = 10;
  EXPECT_THROW(bracket_brute(pretzel_pd({5, 5, 1}), o), DiagramTooLarge);
  EXPECT_NO_THROW(bracket_brute(pretzel_pd({5, 3, 1}), o));
}

TEST(Bracket, ParallelEqualsSequential) {
  BracketOptions par;
  par.workers = 4;
  for (const PretzelParams& k : {PretzelParams(5, 3, -3), PretzelParams(1, 1, 1), PretzelParams(7, -5, 1)}) {
    PDCode pd = pretzel_pd(k);
    EXPECT_EQ(bracket_brute(pd, par), bracket_brute(pd)) << to_string(k);
  }
}

TEST(Bracket, FlippedSmoothingTripsTrefoil) {
  BracketOptions o;
  o.flip_smoothing = true;
  PDCode pd = parse_pd(kTrefoil);
  EXPECT_EQ(bracket_brute(pd, o), oracle_bracket(pd, true));
  EXPECT_NE(bracket_brute(pd, o), bracket_brute(pd));
  bool differs = true;
  try {
    differs = jones(pd, o) != LaurentPoly{{4, -1}, {3, 1}, {1, 1}};
  } catch (const NormalizationError&) {
  }
  EXPECT_TRUE(differs);
}

TEST(TwistTangle, BaseCases) {
  TangleBracket zero = twist_tangle(0);
  EXPECT_EQ(zero.coef_zero, LaurentPoly::constant(1));
  EXPECT_TRUE(zero.coef_infinity.is_zero());
  TangleBracket one = twist_tangle(1);
  std::set<LaurentPoly::Exponent> exps{one.coef_zero.min_exponent(), one.coef_infinity.min_exponent()};
  EXPECT_EQ(exps, (std::set<LaurentPoly::Exponent>{-1, 1}));
  EXPECT_EQ(one.coef_zero.terms().size(), 1U);
  EXPECT_EQ(one.coef_infinity.terms().size(), 1U);
  TangleBracket minus = twist_tangle(-1);
  EXPECT_EQ(minus.coef_zero, one.coef_infinity);
  EXPECT_EQ(minus.coef_infinity, one.coef_zero);
}

TEST(TwistTangle, Recursion) {
  for (int n = 0; n < 6; ++n) EXPECT_EQ(stack(twist_tangle(n), twist_tangle(1)), twist_tangle(n + 1));
  for (int n = 0; n > -6; --n) EXPECT_EQ(stack(twist_tangle(n), twist_tangle(-1)), twist_tangle(n - 1));
}

TEST(BracketTwist, TrefoilAndUnknot) {
  EXPECT_EQ(bracket_twist({1, 1, 1}), bracket_brute(parse_pd(kTrefoil)));
  auto u = bracket_twist({1, 1, -1});
  ASSERT_EQ(u.terms().size(), 1U);
  EXPECT_EQ(u.min_exponent() % 3, 0);
  EXPECT_EQ(jones(PretzelParams(1, 1, -1)), LaurentPoly::constant(1));
}

TEST(BracketTwist, MatchesBrute) {
  for (const auto& k : odd_triples(11)) EXPECT_EQ(bracket_twist(k), bracket_brute(pretzel_pd(k))) << to_string(k);
}

TEST(Jones, MirrorInvertsVariable) {
  for (const auto& k : odd_triples(9)) {
    PDCode pd = pretzel_pd(k);
    EXPECT_EQ(jones(mirror(pd)), invert_variable(jones(pd))) << to_string(k);
  }
  EXPECT_EQ(jones(PretzelParams(-1, -1, -1)), invert_variable(jones(parse_pd(kTrefoil))));
}

TEST(Jones, ValueAtOneIsOne) {
  for (const auto& k : odd_triples(13)) EXPECT_EQ(evaluate(jones(k), 1), 1) << to_string(k);
  for (const char* s : {kTrefoil, kFigureEight, kFiveTwo, "X(1,1,2,2)"}) EXPECT_EQ(evaluate(jones(parse_pd(s)), 1), 1);
}

TEST(Jones, RotationInvariant) {
  for (const auto& k : odd_triples(13)) {
    auto v = jones(k);
    EXPECT_EQ(jones(k.rotated()), v) << to_string(k);
    EXPECT_EQ(jones(k.rotated().rotated()), v) << to_string(k);
  }
}

TEST(Jones, FiveTwoPdMatchesPretzel) {
  EXPECT_EQ(jones(parse_pd(kFiveTwo)), jones(PretzelParams(3, 1, 1)));
}

TEST(Jones, FamilyDerivatives) {
  auto v = jones(PretzelParams(5, 7, -3));
  EXPECT_EQ(evaluate(v, -1), 1);
  EXPECT_EQ(evaluate(derivative(v), -1), -48);
  auto v2 = jones(PretzelParams(9, 11, -5));
  EXPECT_EQ(evaluate(derivative(v2), -1) * evaluate(v2, -1), -240);
}

TEST(Jones, NormalizationTripwire) {
  EXPECT_THROW(jones_from_bracket(LaurentPoly::monomial(1, 1), 0), NormalizationError);
}
