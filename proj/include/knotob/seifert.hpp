#pragma once

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotob/diagram.hpp"
#include "knotob/errors.hpp"
#include "knotob/laurent.hpp"
#include "knotob/rational.hpp"

namespace knotob {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

inline Rational determinant(Matrix<Rational> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

inline LaurentPoly determinant_laplace(const Matrix<LaurentPoly>& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(1);
  if (n == 1) return m[0][0];
  LaurentPoly det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    Matrix<LaurentPoly> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    LaurentPoly term = m[0][c] * determinant_laplace(minor);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

/// Determinant of a matrix whose entries are polynomials (nonnegative exponents) of total
/// determinant degree at most `degree_bound`: evaluate at 0..degree_bound and interpolate.
inline LaurentPoly determinant_interpolated(const Matrix<LaurentPoly>& m, std::size_t degree_bound) {
  const std::size_t n = m.size();
  if (n <= 4) return determinant_laplace(m);
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= degree_bound; ++k) {
    Rational x(static_cast<long long>(k));
    Matrix<Rational> numeric(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) numeric[i][j] = evaluate(m[i][j], x);
    xs.push_back(x);
    ys.push_back(determinant(std::move(numeric)));
  }
  // Newton divided differences.
  std::vector<Rational> coef = ys;
  for (std::size_t level = 1; level < xs.size(); ++level)
    for (std::size_t i = xs.size() - 1; i >= level; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
  LaurentPoly result;
  LaurentPoly basis = LaurentPoly::constant(1);
  for (std::size_t i = 0; i < coef.size(); ++i) {
    result += basis * coef[i];
    basis *= LaurentPoly{{1, 1}, {0, -xs[i]}};
  }
  return result;
}

}  // namespace detail

/// Square integer Seifert matrix of a knot; construction checks det(V - V^T) = 1.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  explicit SeifertMatrix(Matrix<std::int64_t> entries) : entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    for (const auto& row : entries_)
      if (row.size() != n) throw ValidationError("Seifert matrix must be square");
    if (n % 2 != 0) throw ValidationError("Seifert matrix of a knot has even size");
    Matrix<Rational> skew(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) skew[i][j] = Rational(entries_[i][j] - entries_[j][i]);
    if (detail::determinant(std::move(skew)) != 1)
      throw ValidationError("det(V - V^T) must be 1 for a knot Seifert matrix");
  }

  std::size_t size() const noexcept { return entries_.size(); }
  const Matrix<std::int64_t>& entries() const noexcept { return entries_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  Matrix<std::int64_t> entries_;
};

/// Row-major text, rows separated by ';', entries by ','. Empty text is the 0x0 matrix.
inline SeifertMatrix parse_seifert(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  Matrix<std::int64_t> rows;
  if (s.empty()) return SeifertMatrix{};
  std::stringstream rows_in(s);
  std::string row_text;
  while (std::getline(rows_in, row_text, ';')) {
    std::vector<std::int64_t> row;
    std::stringstream cells(row_text);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoll(cell, &used));
        if (used != cell.size()) throw SyntaxError("");
      } catch (const std::exception&) {
        throw SyntaxError("bad Seifert matrix entry '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  return SeifertMatrix(std::move(rows));
}

inline std::string render_seifert(const SeifertMatrix& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ";";
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j > 0) out += ",";
      out += std::to_string(v(i, j));
    }
  }
  return out;
}

/// Normalized det(V - t V^T).
inline LaurentPoly alexander_from_seifert(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  Matrix<LaurentPoly> m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = LaurentPoly{{0, Rational(v(i, j))}, {1, Rational(-v(j, i))}};
  return alexander_normalize(detail::determinant_interpolated(m, n));
}

/// Normalized Alexander polynomial from the Alexander matrix of a diagram (one row per
/// crossing, one column per over-arc, last row and column deleted).
inline LaurentPoly alexander_from_pd(const PDCode& pd) {
  auto orientation = orient(pd);
  const std::size_t n = pd.size();
  if (n == 0) return LaurentPoly::constant(1);

  // Arcs: edges glued through over-crossings.
  std::vector<int> arc_of(pd.edge_count() + 1);
  for (int e = 1; e <= pd.edge_count(); ++e) arc_of[e] = e;
  auto find = [&](int e) {
    while (arc_of[e] != e) e = arc_of[e] = arc_of[arc_of[e]];
    return e;
  };
  for (const auto& x : pd.crossings) arc_of[find(x[1])] = find(x[3]);
  std::vector<int> arc_index(pd.edge_count() + 1, -1);
  int n_arcs = 0;
  for (int e = 1; e <= pd.edge_count(); ++e)
    if (arc_index[find(e)] < 0) arc_index[find(e)] = n_arcs++;
  if (static_cast<std::size_t>(n_arcs) != n) throw ValidationError("diagram does not have one arc per crossing");

  const LaurentPoly one_minus_t{{0, 1}, {1, -1}};
  const LaurentPoly t = LaurentPoly::variable();
  const LaurentPoly minus_one = LaurentPoly::constant(-1);
  Matrix<LaurentPoly> m(n, std::vector<LaurentPoly>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const auto& [a, b, c, d] = pd.crossings[k];
    int over = arc_index[find(b)], in = arc_index[find(a)], out = arc_index[find(c)];
    bool positive = orientation[k].sign() > 0;
    m[k][over] += one_minus_t;
    m[k][in] += positive ? t : minus_one;
    m[k][out] += positive ? minus_one : t;
  }
  Matrix<LaurentPoly> minor(n - 1, std::vector<LaurentPoly>(n - 1));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) minor[i][j] = m[i][j];
  return alexander_normalize(detail::determinant_interpolated(minor, n));
}

/// Signature of V + V^T by exact congruence diagonalization over the rationals.
inline int signature(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  Matrix<Rational> s(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = Rational(v(i, j) + v(j, i));

  auto swap_index = [&](std::size_t i, std::size_t j) {
    std::swap(s[i], s[j]);
    for (auto& row : s) std::swap(row[i], row[j]);
  };
  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (s[k][k] == 0) {
      std::size_t j = k + 1;
      while (j < n && s[j][j] == 0) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && s[k][j] == 0) ++j;
        if (j == n) throw SingularForm("V + V^T is singular");
        // Hyperbolic pair on (k, j): replace e_k by e_k + e_j, giving diagonal entry 2 s[k][j].
        for (std::size_t c = 0; c < n; ++c) s[k][c] += s[j][c];
        for (std::size_t r = 0; r < n; ++r) s[r][k] += s[r][j];
      }
    }
    const Rational pivot = s[k][k];
    sig += pivot > 0 ? 1 : -1;
    // Schur complement: trailing block minus v v^T / pivot.
    std::vector<Rational> v(n);
    for (std::size_t r = k + 1; r < n; ++r) v[r] = s[r][k];
    for (std::size_t r = k + 1; r < n; ++r) {
      if (v[r] == 0) continue;
      for (std::size_t c = k + 1; c < n; ++c) s[r][c] -= v[r] * v[c] / pivot;
    }
    for (std::size_t r = k + 1; r < n; ++r) s[r][k] = s[k][r] = 0;
  }
  return sig;
}

inline Integer knot_determinant(const SeifertMatrix& v) {
  Rational at = evaluate(alexander_from_seifert(v), -1);
  return abs(numerator_of(at));
}

/// Framings (n, m) of the two spine strands, their linking number ell, and the sign eps of
/// the off-diagonal entry ell + eps of the Seifert matrix.
struct GenusOneSpine {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t ell = 0;
  int eps = +1;

  /// ell for eps = +1. An eps = -1 spine has Seifert matrix equal to the transpose of the
  /// eps = +1 spine with linking number ell - 1 (the reversed knot).
  std::int64_t ell_canonical() const noexcept { return eps > 0 ? ell : ell - 1; }

  /// d = nm - ell^2 - ell, in the canonical ell.
  std::int64_t d() const noexcept {
    const std::int64_t l = ell_canonical();
    return n * m - l * l - l;
  }

  friend bool operator==(const GenusOneSpine&, const GenusOneSpine&) = default;
};

inline SeifertMatrix seifert_from_spine(const GenusOneSpine& s) {
  if (s.eps != 1 && s.eps != -1) throw ValidationError("spine eps must be +1 or -1");
  return SeifertMatrix({{s.n, s.ell}, {s.ell + s.eps, s.m}});
}

/// Crossing change along the crossing disk: the framing of strand x moves by `sign`.
inline GenusOneSpine crossing_change(GenusOneSpine s, int sign) {
  if (sign != 1 && sign != -1) throw ValidationError("crossing change sign must be +1 or -1");
  s.n += sign;
  return s;
}

/// d t + (1 - 2d) + d t^-1
inline LaurentPoly alexander_d_form(const Rational& d) { return LaurentPoly{{1, d}, {0, 1 - 2 * d}, {-1, d}}; }

inline LaurentPoly alexander_genus_one(const GenusOneSpine& s) { return alexander_d_form(Rational(s.d())); }

/// Genus-one Seifert matrix of P(p,q,r) from the two-disk, three-band surface, oriented so
/// that P(1,1,1) (the right-handed trefoil in our diagram convention) has signature -2.
inline SeifertMatrix pretzel_seifert(const PretzelParams& k) {
  const auto p = k.p(), q = k.q(), r = k.r();
  return SeifertMatrix({{-(p + q) / 2, -(q + 1) / 2}, {-(q - 1) / 2, -(q + r) / 2}});
}

/// (pq + qr + rp + 1) / 4
inline Rational pretzel_d(const PretzelParams& k) {
  return Rational(k.p() * k.q() + k.q() * k.r() + k.r() * k.p() + 1, 4);
}

/// True iff, over every spine in [-range, range]^3 with both eps and both crossing-change
/// signs, the Alexander polynomial survives the crossing change exactly when m = 0.
inline bool m_forcing_check(std::int64_t range) {
  for (std::int64_t n = -range; n <= range; ++n)
    for (std::int64_t m = -range; m <= range; ++m)
      for (std::int64_t ell = -range; ell <= range; ++ell)
        for (int eps : {1, -1}) {
          GenusOneSpine s{n, m, ell, eps};
          LaurentPoly before = alexander_from_seifert(seifert_from_spine(s));
          for (int sign : {1, -1}) {
            LaurentPoly after = alexander_from_seifert(seifert_from_spine(crossing_change(s, sign)));
            if ((before == after) != (m == 0)) return false;
          }
        }
  return true;
}

}  // namespace knotob
