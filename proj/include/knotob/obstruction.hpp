#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "knotob/diagram.hpp"
#include "knotob/errors.hpp"
#include "knotob/kauffman.hpp"
#include "knotob/laurent.hpp"
#include "knotob/rational.hpp"
#include "knotob/seifert.hpp"
#include "knotob/twoloop.hpp"

namespace knotob {

enum class Verdict { HoldsNontrivialAlexander, HoldsMod16, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::HoldsNontrivialAlexander:
      return "HoldsNontrivialAlexander";
    case Verdict::HoldsMod16:
      return "HoldsMod16";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

inline Verdict parse_verdict(std::string_view s) {
  if (s == "HoldsNontrivialAlexander") return Verdict::HoldsNontrivialAlexander;
  if (s == "HoldsMod16") return Verdict::HoldsMod16;
  if (s == "Inconclusive") return Verdict::Inconclusive;
  throw SyntaxError("unknown verdict '" + std::string(s) + "'");
}

/// Everything computed for one knot, plus the verdict. Jones-derived fields are empty when
/// only Seifert data was supplied; sigma and lambda_w are empty without a Seifert matrix.
struct ObstructionReport {
  LaurentPoly alexander;
  std::optional<LaurentPoly> jones;
  Integer determinant = 1;
  std::optional<int> sigma;
  std::optional<Rational> w3;
  std::optional<Rational> lambda_w;
  std::optional<Rational> theta_at_1;
  std::optional<Rational> theta_at_minus1;
  std::optional<Rational> ob;
  // ob mod 16 in 0..15, present only when ob is an integer.
  std::optional<std::int64_t> ob_mod16;
  bool ob_mod16_nonzero = false;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;
  // Reduced 2-loop polynomial from spine data, when tangle invariants were supplied.
  std::optional<LaurentPoly> two_loop;
};

/// (1/36) V'''(1) + (1/12) V''(1). A non-integer result means the input was not a knot
/// Jones polynomial; a note is appended when `notes` is given.
inline Rational w3(const LaurentPoly& jones, std::vector<std::string>* notes = nullptr) {
  Rational value = evaluate(derivative(jones, 3), 1) / 36 + evaluate(derivative(jones, 2), 1) / 12;
  if (notes && !is_integer(value)) notes->push_back("w3 = " + to_string(value) + " is not an integer; input is not a knot Jones polynomial");
  return value;
}

/// Casson-Walker invariant of the double branched cover: -V'(-1) / (6 V(-1)) + sigma / 4.
inline Rational mullins_lambda_w(const LaurentPoly& jones, int sigma) {
  Rational at = evaluate(jones, -1);
  if (at == 0) throw DivisionByZero("V(-1) = 0; not a knot Jones polynomial");
  return -evaluate(derivative(jones, 1), -1) / (6 * at) + Rational(sigma, 4);
}

struct ObstructionValue {
  Rational theta1;    // 2 w3
  Rational theta_m1;  // -(1/12) V'(-1) V(-1)
  Rational ob;        // theta_m1 - theta1

  friend bool operator==(const ObstructionValue&, const ObstructionValue&) = default;
};

/// Values of the reduced 2-loop polynomial at t = +-1, read off the Jones polynomial, and
/// their difference. A cosmetic crossing on a genus-one knot with trivial Alexander
/// polynomial forces ob into 16Z.
inline ObstructionValue obstruction_value(const LaurentPoly& jones) {
  ObstructionValue out;
  out.theta1 = 2 * w3(jones);
  out.theta_m1 = -evaluate(derivative(jones, 1), -1) * evaluate(jones, -1) / 12;
  out.ob = out.theta_m1 - out.theta1;
  return out;
}

inline bool in_16z(const Rational& x) { return is_integer(x / 16); }

// Inputs accepted by cosmetic_verdict.

struct DiagramInput {
  PDCode pd;
  std::optional<SeifertMatrix> seifert;
};

struct SeifertInput {
  SeifertMatrix seifert;
};

struct SpineInput {
  GenusOneSpine spine;
  std::optional<LaurentPoly> jones;
  std::optional<TangleInvariants> tangle;
};

using KnotInput = std::variant<PretzelParams, DiagramInput, SeifertInput, SpineInput>;

struct VerdictOptions {
  // Cross-validation failures throw InconsistentInput instead of adding a note.
  bool strict = false;
  BracketOptions bracket;
};

namespace detail {

inline void flag(ObstructionReport& report, bool strict, const std::string& message) {
  if (strict) throw InconsistentInput(message);
  report.notes.push_back(message);
}

inline void fill_from_seifert(ObstructionReport& report, const SeifertMatrix& v) {
  report.alexander = alexander_from_seifert(v);
  report.sigma = signature(v);
}

inline void fill_from_jones(ObstructionReport& report, const LaurentPoly& jones, bool strict) {
  report.jones = jones;
  if (evaluate(jones, 1) != 1) flag(report, strict, "V(1) = " + to_string(evaluate(jones, 1)) + ", expected 1 for a knot");
  report.w3 = w3(jones, &report.notes);
  auto value = obstruction_value(jones);
  report.theta_at_1 = value.theta1;
  report.theta_at_minus1 = value.theta_m1;
  report.ob = value.ob;
  if (is_integer(value.ob)) {
    report.ob_mod16 = mod_nonneg(value.ob, 16);
    report.ob_mod16_nonzero = *report.ob_mod16 != 0;
  } else {
    report.ob_mod16_nonzero = true;
  }
  if (report.sigma) report.lambda_w = mullins_lambda_w(jones, *report.sigma);
}

}  // namespace detail

/// Computes the invariants of a (caller-asserted) genus-one knot and applies the two
/// obstructions in order: a nontrivial Alexander polynomial rules out cosmetic crossings
/// outright; otherwise ob outside 16Z does. Anything else is Inconclusive.
inline ObstructionReport cosmetic_verdict(const KnotInput& input, const VerdictOptions& opts = {}) {
  ObstructionReport report;
  std::optional<LaurentPoly> jones;

  if (const auto* k = std::get_if<PretzelParams>(&input)) {
    detail::fill_from_seifert(report, pretzel_seifert(*k));
    jones = knotob::jones(*k);
    if (report.alexander != alexander_d_form(pretzel_d(*k)))
      detail::flag(report, opts.strict, "pretzel Seifert matrix disagrees with the closed-form Alexander polynomial");
  } else if (const auto* in = std::get_if<DiagramInput>(&input)) {
    LaurentPoly from_diagram = alexander_from_pd(in->pd);
    if (in->seifert) {
      detail::fill_from_seifert(report, *in->seifert);
      if (report.alexander != from_diagram)
        detail::flag(report, opts.strict,
                     "Alexander polynomial of the Seifert matrix (" + to_string(report.alexander) +
                         ") differs from the diagram's (" + to_string(from_diagram) + ")");
    } else {
      report.alexander = from_diagram;
      report.notes.push_back("no Seifert matrix given: Alexander polynomial from the diagram, signature unavailable");
    }
    jones = knotob::jones(in->pd, opts.bracket);
  } else if (const auto* in = std::get_if<SeifertInput>(&input)) {
    detail::fill_from_seifert(report, in->seifert);
  } else if (const auto* in = std::get_if<SpineInput>(&input)) {
    detail::fill_from_seifert(report, seifert_from_spine(in->spine));
    jones = in->jones;
    if (in->tangle) report.two_loop = reduced_two_loop(in->spine, *in->tangle);
  }

  report.determinant = abs(numerator_of(evaluate(report.alexander, -1)));
  if (jones) {
    detail::fill_from_jones(report, *jones, opts.strict);
    Integer from_jones = abs(numerator_of(evaluate(*jones, -1)));
    if (from_jones != report.determinant)
      detail::flag(report, opts.strict,
                   "|V(-1)| = " + from_jones.str() + " but |Delta(-1)| = " + report.determinant.str());
    if (report.two_loop) {
      if (evaluate(*report.two_loop, 1) != *report.theta_at_1 || evaluate(*report.two_loop, -1) != *report.theta_at_minus1)
        report.notes.push_back("2-loop polynomial from the tangle invariants does not match the Jones-route values at t = +-1");
    }
  } else {
    report.notes.push_back("no diagram or Jones polynomial: mod-16 test not available");
  }

  const bool trivial_alexander = report.alexander.is_one();
  if (trivial_alexander && report.sigma && *report.sigma != 0)
    report.notes.push_back("signature " + std::to_string(*report.sigma) +
                           " with trivial Alexander polynomial; input is not algebraically slice");
  if (report.ob)
    report.notes.push_back(
        "ob = Theta(-1) - Theta(1) from the Jones polynomial; it lies in 16Z whenever a cosmetic crossing exists. "
        "Its identification with lambda(Sigma_2) - 2 w3 depends on the lambda/lambda_w normalization, so lambda_w is "
        "reported separately");

  if (!trivial_alexander)
    report.verdict = Verdict::HoldsNontrivialAlexander;
  else if (report.ob && !in_16z(*report.ob))
    report.verdict = Verdict::HoldsMod16;
  else
    report.verdict = Verdict::Inconclusive;
  return report;
}

/// The family P(4k+1, 4k+3, -(2k+1)), all of which have trivial Alexander polynomial.
struct PretzelFamilyMember {
  PretzelParams params;
  Rational theta1_closed_form;   // -(1/8)(4k+2)(4k+4)(-2k)
  Rational theta_m1_closed_form; // -(1/24)(4k+2)(4k+4)(-2k)
  Rational ob_closed_form;       // -16 k(k+1)(2k+1)/12
  bool verdict_predicted = false;
};

inline PretzelFamilyMember pretzel_family(std::int64_t k) {
  if (k < 1) throw PreconditionViolation("pretzel family index must be >= 1");
  Rational product = Rational((4 * k + 2) * (4 * k + 4)) * (-2 * k);
  Rational core = Rational(k * (k + 1) * (2 * k + 1), 12);
  return PretzelFamilyMember{
      PretzelParams(4 * k + 1, 4 * k + 3, -(2 * k + 1)),
      -product / 8,
      -product / 24,
      -16 * core,
      !is_integer(core),
  };
}

}  // namespace knotob
