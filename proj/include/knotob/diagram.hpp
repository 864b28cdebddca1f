#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotob/errors.hpp"

namespace knotob {

/// Planar-diagram code of a knot.
///
/// Each crossing is a quadruple (a, b, c, d) of edge labels read clockwise around the
/// crossing, starting from the incoming under-strand edge `a`. The under strand therefore
/// runs a -> c and the over strand joins b and d. Edge labels run 1..2n and increase by
/// one (cyclically) along the orientation of the knot.
///
/// With this reading the over strand crossing b -> d is a positive crossing, and the
/// A-smoothing joins a with d and b with c. `X(1,4,2,5); X(3,6,4,1); X(5,2,6,3)` is the
/// right-handed trefoil (writhe +3).
struct PDCode {
  using Crossing = std::array<int, 4>;

  std::vector<Crossing> crossings;
  // Crossing-free circles; 1 for the crossingless unknot, 0 otherwise.
  int free_loops = 0;

  std::size_t size() const noexcept { return crossings.size(); }
  int edge_count() const noexcept { return static_cast<int>(2 * crossings.size()); }

  friend bool operator==(const PDCode&, const PDCode&) = default;
};

/// Parameters of the pretzel knot P(p, q, r); all three must be odd.
class PretzelParams {
 public:
  PretzelParams(std::int64_t p, std::int64_t q, std::int64_t r) : v_{p, q, r} {
    for (auto x : v_)
      if (x % 2 == 0) throw ValidationError("pretzel parameters must be odd, got " + std::to_string(x));
  }

  std::int64_t p() const noexcept { return v_[0]; }
  std::int64_t q() const noexcept { return v_[1]; }
  std::int64_t r() const noexcept { return v_[2]; }
  const std::array<std::int64_t, 3>& values() const noexcept { return v_; }

  std::int64_t crossing_count() const noexcept { return std::llabs(v_[0]) + std::llabs(v_[1]) + std::llabs(v_[2]); }

  /// (q, r, p)
  PretzelParams rotated() const { return {v_[1], v_[2], v_[0]}; }

  friend bool operator==(const PretzelParams&, const PretzelParams&) = default;

 private:
  std::array<std::int64_t, 3> v_;
};

inline std::string to_string(const PretzelParams& k) {
  return "P(" + std::to_string(k.p()) + "," + std::to_string(k.q()) + "," + std::to_string(k.r()) + ")";
}

/// Checks label range and multiplicity, and the free-loop count.
inline void validate(const PDCode& pd) {
  const int n_edges = pd.edge_count();
  if (pd.crossings.empty()) {
    if (pd.free_loops != 1) throw ValidationError("a crossingless knot diagram has exactly one free loop");
    return;
  }
  if (pd.free_loops != 0) throw ValidationError("free loops alongside crossings make a link, not a knot");
  std::vector<int> seen(n_edges + 1, 0);
  for (const auto& x : pd.crossings)
    for (int label : x) {
      if (label < 1 || label > n_edges)
        throw ValidationError("edge label " + std::to_string(label) + " outside 1.." + std::to_string(n_edges));
      ++seen[label];
    }
  for (int label = 1; label <= n_edges; ++label)
    if (seen[label] != 2)
      throw ValidationError("edge label " + std::to_string(label) + " appears " + std::to_string(seen[label]) +
                            " times (expected 2)");
}

/// Parses `X(a,b,c,d); X(...)`. Empty input is the crossingless unknot.
inline PDCode parse_pd(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;

  PDCode pd;
  if (s.empty()) {
    pd.free_loops = 1;
    return pd;
  }

  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw SyntaxError(what + " at position " + std::to_string(i) + " in PD code '" + s + "'");
  };
  auto expect = [&](char ch) {
    if (i >= s.size() || s[i] != ch) fail(std::string("expected '") + ch + "'");
    ++i;
  };
  auto read_int = [&]() {
    std::size_t start = i;
    if (i < s.size() && s[i] == '-') ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (s[start] == '-' && i == start + 1)) fail("expected integer");
    return std::stoi(s.substr(start, i - start));
  };

  while (true) {
    expect('X');
    expect('(');
    PDCode::Crossing x{};
    for (int k = 0; k < 4; ++k) {
      if (k > 0) expect(',');
      x[k] = read_int();
    }
    expect(')');
    pd.crossings.push_back(x);
    if (i == s.size()) break;
    expect(';');
  }
  validate(pd);
  return pd;
}

inline std::string render_pd(const PDCode& pd) {
  std::string out;
  for (std::size_t k = 0; k < pd.crossings.size(); ++k) {
    const auto& x = pd.crossings[k];
    if (k > 0) out += "; ";
    out += "X(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + "," +
           std::to_string(x[3]) + ")";
  }
  return out;
}

/// Direction of the over strand at one crossing, reconstructed from the labels.
struct CrossingOrientation {
  bool over_b_to_d = false;
  int sign() const noexcept { return over_b_to_d ? +1 : -1; }
};

/// Rejects codes whose labels are not consistent with a single oriented component.
inline std::vector<CrossingOrientation> orient(const PDCode& pd) {
  validate(pd);
  const int n_edges = pd.edge_count();
  auto succ = [n_edges](int x) { return x % n_edges + 1; };

  std::vector<CrossingOrientation> out;
  out.reserve(pd.size());
  std::vector<int> entered(n_edges + 1, 0), left(n_edges + 1, 0);
  for (const auto& [a, b, c, d] : pd.crossings) {
    if (c != succ(a))
      throw ValidationError("under strand " + std::to_string(a) + "->" + std::to_string(c) +
                            " does not follow the orientation (not a single knot component)");
    bool b_to_d = d == succ(b);
    bool d_to_b = b == succ(d);
    if (!b_to_d && !d_to_b)
      throw ValidationError("over strand " + std::to_string(b) + "/" + std::to_string(d) +
                            " is not consecutive (not a single knot component)");
    if (b_to_d && d_to_b) {
      // Only with two edges: the over strand enters on the edge the under strand leaves by.
      b_to_d = b == c;
    }
    ++entered[a];
    ++left[c];
    ++entered[b_to_d ? b : d];
    ++left[b_to_d ? d : b];
    out.push_back({b_to_d});
  }
  for (int e = 1; e <= n_edges; ++e)
    if (entered[e] != 1 || left[e] != 1)
      throw ValidationError("edge " + std::to_string(e) + " is not traversed once in each direction (not a single knot component)");
  return out;
}

inline int writhe(const PDCode& pd) {
  int w = 0;
  for (const auto& o : orient(pd)) w += o.sign();
  return w;
}

/// Swaps over and under at every crossing; re-reads each quadruple from the new incoming
/// under edge.
inline PDCode mirror(const PDCode& pd) {
  auto orientation = orient(pd);
  PDCode out;
  out.free_loops = pd.free_loops;
  for (std::size_t k = 0; k < pd.size(); ++k) {
    const auto& [a, b, c, d] = pd.crossings[k];
    if (orientation[k].over_b_to_d)
      out.crossings.push_back({b, c, d, a});
    else
      out.crossings.push_back({d, a, b, c});
  }
  return out;
}

namespace detail {

/// A crossing with four ports numbered clockwise: 0 = NW, 1 = NE, 2 = SE, 3 = SW.
/// Ports i and i+2 lie on the same strand.
struct PortCrossing {
  bool over_nw_se = false;
};

struct PortGraph {
  std::vector<PortCrossing> crossings;
  // neighbour[4*c + port] = 4*c' + port'
  std::vector<int> neighbour;

  int add_crossing(bool over_nw_se) {
    crossings.push_back({over_nw_se});
    neighbour.resize(4 * crossings.size(), -1);
    return static_cast<int>(crossings.size()) - 1;
  }
  void connect(int c1, int p1, int c2, int p2) {
    neighbour[4 * c1 + p1] = 4 * c2 + p2;
    neighbour[4 * c2 + p2] = 4 * c1 + p1;
  }
};

/// Walks the single component, labels edges 1..2n in order of travel and emits the
/// clockwise quadruples.
inline PDCode to_pd(const PortGraph& g) {
  const int n = static_cast<int>(g.crossings.size());
  PDCode pd;
  if (n == 0) {
    pd.free_loops = 1;
    return pd;
  }
  std::vector<std::array<int, 4>> label(n, {0, 0, 0, 0});
  std::vector<int> under_in(n, -1);

  int cur = 0;  // entering crossing 0 at port 0
  for (int k = 1; k <= 2 * n; ++k) {
    int c = cur / 4, port = cur % 4;
    bool under_here = g.crossings[c].over_nw_se ? (port % 2 == 1) : (port % 2 == 0);
    if (under_here) under_in[c] = port;
    int exit = 4 * c + (port + 2) % 4;
    int next = g.neighbour[exit];
    if (next < 0) throw ValidationError("dangling port in diagram construction");
    label[c][(port + 2) % 4] = k;
    label[next / 4][next % 4] = k;
    cur = next;
    if (cur == 0 && k != 2 * n) throw ValidationError("diagram has more than one component");
  }
  if (cur != 0) throw ValidationError("diagram traversal did not close up");

  for (int c = 0; c < n; ++c) {
    int u = under_in[c];
    pd.crossings.push_back({label[c][u], label[c][(u + 1) % 4], label[c][(u + 2) % 4], label[c][(u + 3) % 4]});
  }
  return pd;
}

}  // namespace detail

/// A positive twist parameter puts the NW-SE strand over in every crossing of that twist
/// region. With this choice P(1,1,1) is the right-handed trefoil (Jones -t^4 + t^3 + t)
/// and P(-1,-1,-1) the left-handed one.
inline constexpr bool kPositiveTwistOverNwSe = true;

/// Standard pretzel picture: three vertical twist regions left to right, adjacent regions
/// joined at top and bottom, the outer arcs joining the first and last region.
inline PDCode pretzel_pd(const PretzelParams& k) {
  detail::PortGraph g;
  std::array<std::vector<int>, 3> region;
  for (int j = 0; j < 3; ++j) {
    auto twists = k.values()[j];
    bool over = (twists > 0) == kPositiveTwistOverNwSe;
    for (std::int64_t i = 0; i < std::llabs(twists); ++i) region[j].push_back(g.add_crossing(over));
    for (std::size_t i = 0; i + 1 < region[j].size(); ++i) {
      g.connect(region[j][i], 3, region[j][i + 1], 0);
      g.connect(region[j][i], 2, region[j][i + 1], 1);
    }
  }
  for (int j = 0; j < 3; ++j) {
    int next = (j + 1) % 3;
    g.connect(region[j].front(), 1, region[next].front(), 0);
    g.connect(region[j].back(), 2, region[next].back(), 3);
  }
  return detail::to_pd(g);
}

}  // namespace knotob
