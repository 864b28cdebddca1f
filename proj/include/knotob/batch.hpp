#pragma once

#include <future>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "knotob/obstruction.hpp"
#include "knotob/report_io.hpp"

namespace knotob {

/// One CSV line: `pretzel,label,p,q,r` | `pd,label,"<pd>"` | `seifert,label,"<rows>"`.
struct BatchRow {
  std::size_t line = 0;
  std::string kind;
  std::string label;
  std::vector<std::string> payload;
};

struct BatchResult {
  BatchRow row;
  std::optional<ObstructionReport> report;
  std::string error;
};

/// Splits one CSV record; double quotes protect commas and `""` is a literal quote.
inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (quoted) throw SyntaxError("unterminated quote in CSV line");
  fields.push_back(cur);
  for (auto& f : fields) {
    while (!f.empty() && f.front() == ' ') f.erase(f.begin());
    while (!f.empty() && f.back() == ' ') f.pop_back();
  }
  return fields;
}

/// Reads the header line and all non-blank rows. Rows that fail to split are kept with an
/// empty kind so the failure is reported per row.
inline std::vector<BatchRow> read_batch_csv(std::istream& in) {
  std::vector<BatchRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!header_seen) {
      header_seen = true;
      auto header = split_csv_line(line);
      if (header.size() < 2 || header[0] != "kind" || header[1] != "label")
        throw SyntaxError("CSV header must start with 'kind,label'");
      continue;
    }
    BatchRow row;
    row.line = line_no;
    try {
      auto fields = split_csv_line(line);
      row.kind = fields[0];
      if (fields.size() > 1) row.label = fields[1];
      for (std::size_t i = 2; i < fields.size(); ++i) row.payload.push_back(fields[i]);
    } catch (const Error& e) {
      row.payload = {line};
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline KnotInput row_to_input(const BatchRow& row) {
  auto need = [&](std::size_t n) {
    if (row.payload.size() < n)
      throw ValidationError(row.kind + " row needs " + std::to_string(n) + " payload column(s)");
  };
  if (row.kind == "pretzel") {
    need(3);
    std::int64_t v[3];
    for (int i = 0; i < 3; ++i) {
      try {
        std::size_t used = 0;
        v[i] = std::stoll(row.payload[i], &used);
        if (used != row.payload[i].size()) throw SyntaxError("");
      } catch (const std::exception&) {
        throw SyntaxError("bad pretzel parameter '" + row.payload[i] + "'");
      }
    }
    return PretzelParams(v[0], v[1], v[2]);
  }
  if (row.kind == "pd") {
    need(1);
    return DiagramInput{parse_pd(row.payload[0]), std::nullopt};
  }
  if (row.kind == "seifert") {
    need(1);
    return SeifertInput{parse_seifert(row.payload[0])};
  }
  throw ValidationError("unknown row kind '" + row.kind + "'");
}

/// Evaluates every row (concurrently when workers > 1); results keep input order.
inline std::vector<BatchResult> run_batch(const std::vector<BatchRow>& rows, const VerdictOptions& opts,
                                          unsigned workers = 1) {
  auto evaluate_row = [&opts](const BatchRow& row) {
    BatchResult res{row, std::nullopt, {}};
    try {
      res.report = cosmetic_verdict(row_to_input(row), opts);
    } catch (const std::exception& e) {
      res.error = e.what();
    }
    return res;
  };
  std::vector<BatchResult> out;
  out.reserve(rows.size());
  if (workers <= 1) {
    for (const auto& row : rows) out.push_back(evaluate_row(row));
    return out;
  }
  for (std::size_t start = 0; start < rows.size(); start += workers) {
    std::vector<std::future<BatchResult>> wave;
    for (std::size_t i = start; i < rows.size() && i < start + workers; ++i)
      wave.push_back(std::async(std::launch::async, evaluate_row, std::cref(rows[i])));
    for (auto& f : wave) out.push_back(f.get());
  }
  return out;
}

inline nlohmann::json batch_to_json(const std::vector<BatchResult>& results) {
  nlohmann::json rows = nlohmann::json::array();
  std::map<std::string, int> counts{
      {"HoldsNontrivialAlexander", 0}, {"HoldsMod16", 0}, {"Inconclusive", 0}, {"errors", 0}};
  for (const auto& r : results) {
    nlohmann::json j;
    j["line"] = r.row.line;
    j["kind"] = r.row.kind;
    j["label"] = r.row.label;
    if (r.report) {
      j["report"] = report_to_json(*r.report);
      ++counts[to_string(r.report->verdict)];
    } else {
      j["error"] = r.error;
      ++counts["errors"];
    }
    rows.push_back(std::move(j));
  }
  nlohmann::json summary(counts);
  summary["total"] = results.size();
  return {{"rows", rows}, {"summary", summary}};
}

}  // namespace knotob
