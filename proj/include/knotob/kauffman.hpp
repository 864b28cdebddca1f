#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "knotob/diagram.hpp"
#include "knotob/errors.hpp"
#include "knotob/laurent.hpp"

namespace knotob {

/// Kauffman bracket, a Laurent polynomial in A.
using BracketPoly = LaurentPoly;

/// delta = -A^2 - A^-2, the value of a closed loop.
inline const BracketPoly& loop_value() {
  static const BracketPoly delta{{2, -1}, {-2, -1}};
  return delta;
}

struct BracketOptions {
  std::size_t max_crossings = 20;
  // Debug tripwire: swap the A- and B-smoothings.
  bool flip_smoothing = false;
  unsigned workers = 1;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { reset(); }
  void reset() {
    std::iota(parent_.begin(), parent_.end(), 0);
    components_ = static_cast<int>(parent_.size());
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[a] = b;
      --components_;
    }
  }
  int components() const noexcept { return components_; }

 private:
  std::vector<int> parent_;
  int components_ = 0;
};

// histogram[b][loops] = number of states with b B-smoothings and that many loops
using StateHistogram = std::vector<std::vector<std::int64_t>>;

inline StateHistogram count_states(const PDCode& pd, bool flip, std::uint64_t first, std::uint64_t last) {
  const int n = static_cast<int>(pd.size());
  const int n_edges = pd.edge_count();
  StateHistogram hist(n + 1, std::vector<std::int64_t>(n_edges + 2, 0));
  UnionFind uf(n_edges + 1);  // label 0 unused
  for (std::uint64_t state = first; state < last; ++state) {
    uf.reset();
    int b_count = 0;
    for (int k = 0; k < n; ++k) {
      const auto& [a, b, c, d] = pd.crossings[k];
      bool b_smoothing = ((state >> k) & 1U) != 0;
      b_count += b_smoothing;
      if (b_smoothing != flip) {
        uf.unite(a, b);
        uf.unite(c, d);
      } else {
        uf.unite(a, d);
        uf.unite(b, c);
      }
    }
    ++hist[b_count][uf.components() - 1];  // label 0 is a singleton
  }
  return hist;
}

}  // namespace detail

/// Full 2^n state sum. Each state is an n-bit word (bit k set = B-smoothing at crossing k)
/// and its loops are counted with a union-find over edge labels. States are tallied by
/// (B-count, loop count) in integers before any polynomial arithmetic, so splitting the
/// range across workers gives the same result as a sequential sum.
inline BracketPoly bracket_brute(const PDCode& pd, const BracketOptions& opts = {}) {
  validate(pd);
  const std::size_t n = pd.size();
  if (n > opts.max_crossings)
    throw DiagramTooLarge("diagram has " + std::to_string(n) + " crossings, above the brute-force cap of " +
                          std::to_string(opts.max_crossings) + "; use the twist-region method for pretzel knots");
  if (n == 0) return loop_value().pow(static_cast<unsigned>(pd.free_loops - 1));

  const std::uint64_t total = std::uint64_t{1} << n;
  unsigned workers = std::max(1U, std::min<unsigned>(opts.workers, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
  detail::StateHistogram hist;
  if (workers == 1) {
    hist = detail::count_states(pd, opts.flip_smoothing, 0, total);
  } else {
    std::vector<std::future<detail::StateHistogram>> parts;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
      parts.push_back(std::async(std::launch::async, detail::count_states, std::cref(pd), opts.flip_smoothing, lo, hi));
    }
    for (auto& f : parts) {
      auto h = f.get();
      if (hist.empty()) {
        hist = std::move(h);
        continue;
      }
      for (std::size_t b = 0; b < h.size(); ++b)
        for (std::size_t l = 0; l < h[b].size(); ++l) hist[b][l] += h[b][l];
    }
  }

  std::vector<BracketPoly> delta_pow{BracketPoly::constant(1)};
  BracketPoly result;
  for (std::size_t b = 0; b <= n; ++b) {
    auto a_minus_b = static_cast<LaurentPoly::Exponent>(n) - 2 * static_cast<LaurentPoly::Exponent>(b);
    for (std::size_t l = 0; l < hist[b].size(); ++l) {
      if (hist[b][l] == 0) continue;
      std::size_t loops_minus_one = l - 1 + pd.free_loops;
      while (delta_pow.size() <= loops_minus_one) delta_pow.push_back(delta_pow.back() * loop_value());
      result += delta_pow[loops_minus_one].shifted(a_minus_b) * Rational(hist[b][l]);
    }
  }
  return result;
}

/// A 2-strand vertical tangle written as coef_zero * (two vertical strands) +
/// coef_infinity * (cap over cup).
struct TangleBracket {
  BracketPoly coef_zero = BracketPoly::constant(1);
  BracketPoly coef_infinity;

  friend bool operator==(const TangleBracket&, const TangleBracket&) = default;
};

/// Stacks `upper` on top of `lower`. Cap-over-cup meeting cap-over-cup closes one loop.
inline TangleBracket stack(const TangleBracket& upper, const TangleBracket& lower) {
  TangleBracket out;
  out.coef_zero = upper.coef_zero * lower.coef_zero;
  out.coef_infinity = upper.coef_zero * lower.coef_infinity + upper.coef_infinity * lower.coef_zero +
                      upper.coef_infinity * lower.coef_infinity * loop_value();
  return out;
}

/// n half-twists; the sign of n follows the pretzel handedness convention.
inline TangleBracket twist_tangle(std::int64_t n_halftwists) {
  // With the NW-SE strand over, the A-smoothing is the cap/cup one.
  bool over_nw_se = (n_halftwists > 0) == kPositiveTwistOverNwSe;
  TangleBracket one;
  one.coef_zero = BracketPoly::monomial(1, over_nw_se ? -1 : 1);
  one.coef_infinity = BracketPoly::monomial(1, over_nw_se ? 1 : -1);

  TangleBracket acc;
  for (std::int64_t i = 0; i < std::llabs(n_halftwists); ++i) acc = stack(acc, one);
  return acc;
}

namespace detail {

/// Loops in the pretzel closure when region j is smoothed to vertical strands (bit j clear)
/// or cap/cup (bit j set).
inline int pretzel_closure_loops(unsigned choice) {
  // ends of region j: 4j + {0 NW, 1 NE, 2 SE, 3 SW}
  UnionFind uf(12);
  for (int j = 0; j < 3; ++j) {
    int base = 4 * j;
    if ((choice >> j) & 1U) {
      uf.unite(base + 0, base + 1);
      uf.unite(base + 3, base + 2);
    } else {
      uf.unite(base + 0, base + 3);
      uf.unite(base + 1, base + 2);
    }
    int next = 4 * ((j + 1) % 3);
    uf.unite(base + 1, next + 0);
    uf.unite(base + 2, next + 3);
  }
  return uf.components();
}

}  // namespace detail

/// Bracket of P(p,q,r) from three twist-region tangles; cost is linear in |p|+|q|+|r|.
inline BracketPoly bracket_twist(const PretzelParams& k) {
  std::array<TangleBracket, 3> t{twist_tangle(k.p()), twist_tangle(k.q()), twist_tangle(k.r())};
  BracketPoly result;
  for (unsigned choice = 0; choice < 8; ++choice) {
    BracketPoly term = BracketPoly::constant(1);
    for (int j = 0; j < 3; ++j) term *= ((choice >> j) & 1U) ? t[j].coef_infinity : t[j].coef_zero;
    if (term.is_zero()) continue;
    term *= loop_value().pow(static_cast<unsigned>(detail::pretzel_closure_loops(choice) - 1));
    result += term;
  }
  return result;
}

/// (-A^3)^-w <D>, then t = A^-4.
inline LaurentPoly jones_from_bracket(const BracketPoly& bracket, int writhe) {
  BracketPoly f = bracket.shifted(-3 * static_cast<LaurentPoly::Exponent>(writhe));
  if (writhe % 2 != 0) f = -f;
  LaurentPoly v;
  for (const auto& [e, c] : f.terms()) {
    if (e % 4 != 0)
      throw NormalizationError("writhe-corrected bracket has exponent " + std::to_string(e) +
                               " not divisible by 4; diagram conventions are inconsistent");
    v.add_term(-e / 4, c);
  }
  return v;
}

inline LaurentPoly jones(const PDCode& pd, const BracketOptions& opts = {}) {
  return jones_from_bracket(bracket_brute(pd, opts), writhe(pd));
}

inline LaurentPoly jones(const PretzelParams& k) { return jones_from_bracket(bracket_twist(k), writhe(pretzel_pd(k))); }

}  // namespace knotob
