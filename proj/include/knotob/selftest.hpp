#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "knotob/diagram.hpp"
#include "knotob/kauffman.hpp"
#include "knotob/obstruction.hpp"
#include "knotob/seifert.hpp"
#include "knotob/twoloop.hpp"

namespace knotob {

struct SelftestOptions {
  bool flip_smoothing = false;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline const std::vector<std::string>& selftest_suite_names() {
  static const std::vector<std::string> names{"trefoil", "bracket", "mforcing", "constraints", "identity", "family"};
  return names;
}

namespace detail {

inline SuiteResult suite_trefoil(const SelftestOptions& o) {
  BracketOptions b;
  b.flip_smoothing = o.flip_smoothing;
  PDCode pd = parse_pd("X(1,4,2,5); X(3,6,4,1); X(5,2,6,3)");
  LaurentPoly v = jones(pd, b);
  LaurentPoly expected{{4, -1}, {3, 1}, {1, 1}};
  bool ok = writhe(pd) == 3 && v == expected;
  return {"trefoil", ok, "writhe " + std::to_string(writhe(pd)) + ", Jones " + to_string(v)};
}

inline SuiteResult suite_bracket(const SelftestOptions& o) {
  BracketOptions b;
  b.flip_smoothing = o.flip_smoothing;
  int checked = 0;
  for (int p = -7; p <= 7; p += 2)
    for (int q = -7; q <= 7; q += 2)
      for (int r = -7; r <= 7; r += 2) {
        PretzelParams k(p, q, r);
        if (k.crossing_count() > 9) continue;
        if (bracket_twist(k) != bracket_brute(pretzel_pd(k), b))
          return {"bracket", false, "twist and state-sum brackets differ at " + to_string(k)};
        ++checked;
      }
  return {"bracket", true, std::to_string(checked) + " pretzel diagrams with at most 9 crossings"};
}

inline SuiteResult suite_mforcing(const SelftestOptions&) {
  bool ok = m_forcing_check(5);
  return {"mforcing", ok, "spines in [-5,5]^3, both eps and both crossing-change signs"};
}

inline SuiteResult suite_constraints(const SelftestOptions&) {
  auto sols = constraint_solutions(50);
  bool ok = sols == std::set<std::pair<std::int64_t, std::int64_t>>{{0, 0}};
  bool quarter = false;
  for (const auto& root : constraint_rational_roots())
    if (root.d == Rational(1, 4) && root.v2yy == Rational(-1, 8) && !root.integral) quarter = true;
  return {"constraints", ok && quarter,
          std::to_string(sols.size()) + " integer solution(s) in [-50,50]^2; rational root d = 1/4 " +
              (quarter ? "found and rejected" : "missing")};
}

inline SuiteResult suite_identity(const SelftestOptions&) {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<std::int64_t> inv(-20, 20), framing(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    int eps = (rng() & 1U) ? 1 : -1;
    std::int64_t ell = ((rng() & 1U) ? 0 : -1) + (eps < 0 ? 1 : 0);
    GenusOneSpine s{framing(rng), 0, ell, eps};
    TangleInvariants ti{inv(rng), inv(rng), inv(rng), inv(rng)};
    if (theta_difference_identity(s, ti) != 16 * ti.v3)
      return {"identity", false, "Theta(-1) - Theta(1) != 16 v3 at sample " + std::to_string(i)};
  }
  return {"identity", true, "1000 random spines with m = 0, d = 0"};
}

inline SuiteResult suite_family(const SelftestOptions&) {
  std::string hits;
  for (std::int64_t k = 1; k <= 8; ++k) {
    auto member = pretzel_family(k);
    if (!alexander_from_seifert(pretzel_seifert(member.params)).is_one())
      return {"family", false, "nontrivial Alexander polynomial at k = " + std::to_string(k)};
    if (member.verdict_predicted != (k % 4 == 1 || k % 4 == 2))
      return {"family", false, "closed-form verdict off at k = " + std::to_string(k)};
    if (member.verdict_predicted) hits += (hits.empty() ? "" : ",") + std::to_string(k);
  }
  auto k1 = pretzel_family(1);
  auto value = obstruction_value(jones(k1.params));
  if (value.ob != k1.ob_closed_form)
    return {"family", false, "Jones-route ob " + to_string(value.ob) + " at k = 1, closed form " + to_string(k1.ob_closed_form)};
  return {"family", true, "obstruction holds at k = {" + hits + "}; Jones route agrees at k = 1"};
}

}  // namespace detail

/// Runs the named suites (all when `only` is empty).
inline std::vector<SuiteResult> run_selftest(const std::vector<std::string>& only = {}, const SelftestOptions& o = {}) {
  static const std::vector<std::pair<std::string, std::function<SuiteResult(const SelftestOptions&)>>> suites{
      {"trefoil", detail::suite_trefoil},         {"bracket", detail::suite_bracket},
      {"mforcing", detail::suite_mforcing},       {"constraints", detail::suite_constraints},
      {"identity", detail::suite_identity},       {"family", detail::suite_family},
  };
  for (const auto& name : only) {
    bool known = false;
    for (const auto& s : suites) known = known || s.first == name;
    if (!known) throw ValidationError("unknown selftest suite '" + name + "'");
  }
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : suites) {
    if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) continue;
    try {
      out.push_back(fn(o));
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("threw: ") + e.what()});
    }
  }
  return out;
}

}  // namespace knotob
