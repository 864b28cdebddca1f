#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "knotob/batch.hpp"
#include "knotob/obstruction.hpp"
#include "knotob/report_io.hpp"
#include "knotob/selftest.hpp"

namespace knotob::cli {

/// Raw input flags shared by `invariants` and `obstruct`.
struct InputFlags {
  std::optional<std::string> pretzel;
  std::optional<std::string> pd;
  std::optional<std::string> seifert;
  std::optional<std::string> spine;
  std::optional<std::string> jones;
  std::optional<std::string> tinv;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

inline std::vector<std::int64_t> parse_int_list(const std::string& text, std::size_t count, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(cell, &used));
      while (used < cell.size() && cell[used] == ' ') ++used;
      if (used != cell.size()) throw SyntaxError("");
    } catch (const std::exception&) {
      throw SyntaxError(std::string("bad integer '") + cell + "' in " + what);
    }
  }
  if (out.size() != count)
    throw SyntaxError(std::string(what) + " needs " + std::to_string(count) + " comma-separated integers");
  return out;
}

inline KnotInput input_from_flags(const InputFlags& f) {
  int sources = (f.pretzel ? 1 : 0) + (f.pd ? 1 : 0) + (f.spine ? 1 : 0) + (f.seifert && !f.pd ? 1 : 0);
  if (sources != 1)
    throw UsageError("give exactly one input: --pretzel p,q,r | --pd \"<code>\" [--seifert rows] | --seifert rows | "
                     "--spine n,m,ell,eps");
  if ((f.jones || f.tinv) && !f.spine) throw UsageError("--jones and --tinv go with --spine");

  if (f.pretzel) {
    auto v = parse_int_list(*f.pretzel, 3, "--pretzel");
    return PretzelParams(v[0], v[1], v[2]);
  }
  if (f.pd) {
    DiagramInput in{parse_pd(*f.pd), std::nullopt};
    if (f.seifert) in.seifert = parse_seifert(*f.seifert);
    return in;
  }
  if (f.seifert) return SeifertInput{parse_seifert(*f.seifert)};
  auto v = parse_int_list(*f.spine, 4, "--spine");
  SpineInput in{GenusOneSpine{v[0], v[1], v[2], static_cast<int>(v[3])}, std::nullopt, std::nullopt};
  if (f.jones) in.jones = parse_laurent(*f.jones);
  if (f.tinv) {
    auto t = parse_int_list(*f.tinv, 4, "--tinv");
    in.tangle = TangleInvariants{t[0], t[1], t[2], t[3]};
  }
  return in;
}

inline bool strict_from_env() {
  const char* v = std::getenv("KNOTOBSTRUCT_STRICT");
  return v != nullptr && std::string(v) == "1";
}

namespace detail {

inline std::string opt(const std::optional<Rational>& r) { return r ? to_string(*r) : "-"; }

inline void print_row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(18) << key << value << '\n';
}

inline std::string branch_text(Verdict v) {
  switch (v) {
    case Verdict::HoldsNontrivialAlexander:
      return "Alexander polynomial is nontrivial";
    case Verdict::HoldsMod16:
      return "Alexander polynomial is trivial and ob is not divisible by 16";
    case Verdict::Inconclusive:
      return "neither obstruction applies";
  }
  return "";
}

inline void print_invariants(std::ostream& out, const ObstructionReport& r) {
  print_row(out, "alexander", to_string(r.alexander));
  print_row(out, "determinant", r.determinant.str());
  print_row(out, "sigma", r.sigma ? std::to_string(*r.sigma) : "-");
  print_row(out, "jones", r.jones ? to_string(*r.jones) : "-");
  print_row(out, "w3", opt(r.w3));
  print_row(out, "theta_at_1", opt(r.theta_at_1));
  print_row(out, "theta_at_minus1", opt(r.theta_at_minus1));
  print_row(out, "ob", opt(r.ob));
  print_row(out, "ob_mod16", r.ob_mod16 ? std::to_string(*r.ob_mod16) : (r.ob ? "non-integer" : "-"));
  print_row(out, "lambda_w", opt(r.lambda_w));
  if (r.two_loop) print_row(out, "two_loop", to_string(*r.two_loop));
}

}  // namespace detail

inline int cmd_invariants(const InputFlags& flags, bool json, std::ostream& out) {
  VerdictOptions opts;
  opts.strict = strict_from_env();
  auto report = cosmetic_verdict(input_from_flags(flags), opts);
  if (json) {
    out << report_to_json(report).dump(2) << '\n';
  } else {
    detail::print_invariants(out, report);
  }
  return 0;
}

inline int cmd_obstruct(const InputFlags& flags, bool json, std::ostream& out) {
  VerdictOptions opts;
  opts.strict = strict_from_env();
  auto report = cosmetic_verdict(input_from_flags(flags), opts);
  if (json) {
    out << report_to_json(report).dump(2) << '\n';
    return 0;
  }
  out << to_string(report.verdict) << '\n';
  detail::print_row(out, "branch", detail::branch_text(report.verdict));
  detail::print_row(out, "alexander", to_string(report.alexander));
  detail::print_row(out, "ob", detail::opt(report.ob));
  for (const auto& note : report.notes) out << "note: " << note << '\n';
  return 0;
}

struct ScanRow {
  std::int64_t k = 0;
  PretzelFamilyMember member;
  bool alexander_trivial = false;
  std::optional<ObstructionValue> jones_route;
  bool agree = false;
};

inline std::vector<ScanRow> pretzel_scan(std::int64_t k_min, std::int64_t k_max, std::int64_t jones_upto) {
  if (k_min < 1 || k_max < k_min) throw UsageError("need 1 <= k-min <= k-max");
  std::vector<ScanRow> rows;
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    ScanRow row{k, pretzel_family(k), false, std::nullopt, false};
    row.alexander_trivial = alexander_from_seifert(pretzel_seifert(row.member.params)).is_one();
    if (k <= jones_upto) {
      row.jones_route = obstruction_value(jones(row.member.params));
      row.agree = row.jones_route->ob == row.member.ob_closed_form &&
                  row.jones_route->theta1 == row.member.theta1_closed_form &&
                  row.jones_route->theta_m1 == row.member.theta_m1_closed_form;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline int cmd_pretzel_scan(std::int64_t k_min, std::int64_t k_max, std::int64_t jones_upto, bool csv,
                            std::ostream& out) {
  auto rows = pretzel_scan(k_min, k_max, jones_upto);
  if (csv) {
    out << "k,p,q,r,alexander_trivial,ob_closed_form,verdict,jones_ob,agree\n";
    for (const auto& r : rows) {
      const auto& pr = r.member.params;
      out << r.k << ',' << pr.p() << ',' << pr.q() << ',' << pr.r() << ',' << (r.alexander_trivial ? "true" : "false")
          << ',' << to_string(r.member.ob_closed_form) << ',' << (r.member.verdict_predicted ? "true" : "false") << ','
          << (r.jones_route ? to_string(r.jones_route->ob) : "") << ','
          << (r.jones_route ? (r.agree ? "true" : "false") : "") << '\n';
    }
    return 0;
  }
  out << std::left << std::setw(5) << "k" << std::setw(18) << "knot" << std::setw(10) << "Delta=1" << std::setw(12)
      << "ob" << std::setw(9) << "verdict" << std::setw(12) << "jones ob" << "agree\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(5) << r.k << std::setw(18) << to_string(r.member.params) << std::setw(10)
        << (r.alexander_trivial ? "yes" : "no") << std::setw(12) << to_string(r.member.ob_closed_form) << std::setw(9)
        << (r.member.verdict_predicted ? "true" : "false") << std::setw(12)
        << (r.jones_route ? to_string(r.jones_route->ob) : "-") << (r.jones_route ? (r.agree ? "yes" : "NO") : "-")
        << '\n';
  }
  return 0;
}

inline int cmd_batch(const std::string& input_path, const std::string& output_path, unsigned workers,
                     std::ostream& out) {
  std::ifstream in(input_path);
  if (!in) throw std::runtime_error("cannot open " + input_path);
  VerdictOptions opts;
  opts.strict = strict_from_env();
  auto results = run_batch(read_batch_csv(in), opts, workers);
  auto doc = batch_to_json(results);
  if (output_path.empty() || output_path == "-") {
    out << doc.dump(2) << '\n';
    return 0;
  }
  std::ofstream file(output_path);
  if (!file) throw std::runtime_error("cannot write " + output_path);
  file << doc.dump(2) << '\n';
  if (!file) throw std::runtime_error("write failed for " + output_path);
  const auto& s = doc["summary"];
  out << "rows " << s["total"] << ": HoldsNontrivialAlexander " << s["HoldsNontrivialAlexander"] << ", HoldsMod16 "
      << s["HoldsMod16"] << ", Inconclusive " << s["Inconclusive"] << ", errors " << s["errors"] << '\n';
  return 0;
}

inline int cmd_selftest(const std::vector<std::string>& suites, bool flip_smoothing, std::ostream& out) {
  SelftestOptions o;
  o.flip_smoothing = flip_smoothing;
  bool all = true;
  for (const auto& r : run_selftest(suites, o)) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << std::left << std::setw(12) << r.name << r.detail << '\n';
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

}  // namespace knotob::cli
