#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "knotob/cli.hpp"

using namespace knotob;
using namespace knotob::cli;

namespace {

InputFlags pretzel(const std::string& s) {
  InputFlags f;
  f.pretzel = s;
  return f;
}

nlohmann::json run_json(const InputFlags& f) {
  std::ostringstream out;
  EXPECT_EQ(cmd_invariants(f, true, out), 0);
  return nlohmann::json::parse(out.str());
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("knotob_" + name)).string();
}

}  // namespace

TEST(Flags, ExactlyOneSource) {
  EXPECT_THROW(input_from_flags({}), UsageError);
  InputFlags two = pretzel("1,1,1");
  two.seifert = "6,4;3,2";
  EXPECT_THROW(input_from_flags(two), UsageError);
  InputFlags jones_alone = pretzel("1,1,1");
  jones_alone.jones = "1";
  EXPECT_THROW(input_from_flags(jones_alone), UsageError);

  InputFlags pd_and_seifert;
  pd_and_seifert.pd = "X(1,4,2,5); X(3,6,4,1); X(5,2,6,3)";
  pd_and_seifert.seifert = "-1,1;0,-1";
  EXPECT_TRUE(std::holds_alternative<DiagramInput>(input_from_flags(pd_and_seifert)));
}

TEST(Flags, ParseErrors) {
  EXPECT_THROW(input_from_flags(pretzel("1,1")), SyntaxError);
  EXPECT_THROW(input_from_flags(pretzel("1,a,1")), SyntaxError);
  EXPECT_THROW(input_from_flags(pretzel("2,1,1")), ValidationError);
  InputFlags spine;
  spine.spine = "-1,-1,0,1";
  spine.tinv = "1,2,3";
  EXPECT_THROW(input_from_flags(spine), SyntaxError);
}

TEST(Invariants, TrefoilTable) {
  std::ostringstream out;
  EXPECT_EQ(cmd_invariants(pretzel("1,1,1"), false, out), 0);
  std::string text = out.str();
  EXPECT_NE(text.find("t - 1 + t^-1"), std::string::npos) << text;
  EXPECT_NE(text.find("determinant       3"), std::string::npos) << text;
  EXPECT_NE(text.find("sigma             -2"), std::string::npos) << text;
}

TEST(Invariants, FamilyJson) {
  auto j = run_json(pretzel("5,7,-3"));
  EXPECT_EQ(j["ob"], "-8");
  EXPECT_EQ(j["theta_at_1"], "12");
  EXPECT_EQ(j["theta_at_minus1"], "4");
  EXPECT_EQ(j["verdict"], "HoldsMod16");
  EXPECT_EQ(j["alexander"], nlohmann::json({{"0", "1"}}));
}

TEST(Invariants, EmptyPdIsUnknot) {
  InputFlags f;
  f.pd = "";
  auto j = run_json(f);
  EXPECT_EQ(j["alexander"], nlohmann::json({{"0", "1"}}));
  EXPECT_EQ(j["jones"], nlohmann::json({{"0", "1"}}));
  EXPECT_EQ(j["ob"], "0");
  EXPECT_EQ(j["determinant"], 1);
}

TEST(Invariants, SpineWithTangle) {
  InputFlags f;
  f.spine = "0,0,0,1";
  f.tinv = "0,0,0,1";
  auto j = run_json(f);
  EXPECT_EQ(j["two_loop"], nlohmann::json({{"-1", "-4"}, {"0", "-28"}, {"1", "-4"}}));
  EXPECT_TRUE(j["jones"].is_null());
}

TEST(Obstruct, Verdicts) {
  for (const auto& [params, verdict] : std::vector<std::pair<std::string, std::string>>{
           {"1,1,1", "HoldsNontrivialAlexander"}, {"5,7,-3", "HoldsMod16"}, {"13,15,-7", "Inconclusive"}}) {
    std::ostringstream out;
    EXPECT_EQ(cmd_obstruct(pretzel(params), false, out), 0);
    std::string first = out.str().substr(0, out.str().find('\n'));
    EXPECT_EQ(first, verdict);
  }
}

TEST(Json, ReportRoundTrip) {
  for (const std::string& params : {"1,1,1", "5,7,-3", "3,5,-1", "-1,-1,-1"}) {
    auto input = input_from_flags(pretzel(params));
    auto r = cosmetic_verdict(input);
    auto back = report_from_json(nlohmann::json::parse(report_to_json(r).dump()));
    EXPECT_EQ(back.alexander, r.alexander);
    EXPECT_EQ(back.jones, r.jones);
    EXPECT_EQ(back.determinant, r.determinant);
    EXPECT_EQ(back.sigma, r.sigma);
    EXPECT_EQ(back.w3, r.w3);
    EXPECT_EQ(back.lambda_w, r.lambda_w);
    EXPECT_EQ(back.theta_at_1, r.theta_at_1);
    EXPECT_EQ(back.theta_at_minus1, r.theta_at_minus1);
    EXPECT_EQ(back.ob, r.ob);
    EXPECT_EQ(back.ob_mod16, r.ob_mod16);
    EXPECT_EQ(back.ob_mod16_nonzero, r.ob_mod16_nonzero);
    EXPECT_EQ(back.verdict, r.verdict);
    EXPECT_EQ(back.notes, r.notes);
  }
  auto lam = report_to_json(cosmetic_verdict(PretzelParams(1, 1, 1)));
  EXPECT_EQ(lam["lambda_w"], "-1/18");
}

TEST(Scan, FamilyVerdicts) {
  auto rows = pretzel_scan(1, 8, 0);
  ASSERT_EQ(rows.size(), 8U);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.alexander_trivial);
    EXPECT_EQ(r.member.verdict_predicted, r.k == 1 || r.k == 2 || r.k == 5 || r.k == 6) << r.k;
    EXPECT_FALSE(r.jones_route);
  }
  auto k1 = pretzel_scan(1, 1, 1);
  ASSERT_TRUE(k1[0].jones_route);
  EXPECT_EQ(k1[0].jones_route->ob, -8);
  EXPECT_TRUE(k1[0].agree);
  auto k3 = pretzel_scan(3, 3, 0);
  EXPECT_EQ(k3[0].member.ob_closed_form, -112);
  EXPECT_FALSE(k3[0].member.verdict_predicted);
  EXPECT_THROW(pretzel_scan(0, 3, 0), UsageError);
  EXPECT_THROW(pretzel_scan(4, 3, 0), UsageError);
}

TEST(Scan, Csv) {
  std::ostringstream out;
  cmd_pretzel_scan(1, 2, 1, true, out);
  std::istringstream lines(out.str());
  std::string header, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  EXPECT_EQ(header, "k,p,q,r,alexander_trivial,ob_closed_form,verdict,jones_ob,agree");
  EXPECT_EQ(row1, "1,5,7,-3,true,-8,true,-8,true");
  EXPECT_EQ(row2, "2,9,11,-5,true,-40,true,,");
}

TEST(Batch, SampleFile) {
  std::ostringstream out;
  ASSERT_EQ(cmd_batch(std::string(KNOTOB_SAMPLES_DIR) + "/sample_batch.csv", "-", 1, out), 0);
  auto j = nlohmann::json::parse(out.str());
  ASSERT_EQ(j["rows"].size(), 3U);
  EXPECT_EQ(j["rows"][0]["report"]["verdict"], "HoldsNontrivialAlexander");
  EXPECT_EQ(j["rows"][1]["report"]["verdict"], "HoldsMod16");
  EXPECT_EQ(j["rows"][2]["report"]["verdict"], "Inconclusive");
  EXPECT_EQ(j["summary"]["total"], 3);
  EXPECT_EQ(j["summary"]["errors"], 0);
}

TEST(Batch, HeaderOnly) {
  std::istringstream in("kind,label,payload\n");
  auto results = run_batch(read_batch_csv(in), {});
  auto j = batch_to_json(results);
  EXPECT_TRUE(j["rows"].empty());
  EXPECT_EQ(j["summary"]["total"], 0);
  EXPECT_EQ(j["summary"]["HoldsMod16"], 0);
  EXPECT_EQ(j["summary"]["errors"], 0);
}

TEST(Batch, PerRowErrors) {
  std::istringstream in(
      "kind,label,payload\n"
      "pretzel,even,2,1,1\n"
      "pretzel,ok,1,1,1\n"
      "pd,broken,\"X(1,2\"\n"
      "braid,unknown,1\n"
      "seifert,fam1,\"6,4;3,2\"\n");
  auto results = run_batch(read_batch_csv(in), {});
  ASSERT_EQ(results.size(), 5U);
  EXPECT_FALSE(results[0].report);
  EXPECT_NE(results[0].error.find("odd"), std::string::npos) << results[0].error;
  EXPECT_TRUE(results[1].report);
  EXPECT_FALSE(results[2].report);
  EXPECT_FALSE(results[3].report);
  ASSERT_TRUE(results[4].report);
  EXPECT_EQ(results[4].report->sigma, 0);
  EXPECT_EQ(batch_to_json(results)["summary"]["errors"], 3);
}

TEST(Batch, BadHeader) {
  std::istringstream in("label,kind\npretzel,x,1,1,1\n");
  EXPECT_THROW(read_batch_csv(in), SyntaxError);
}

TEST(Batch, WorkersDoNotChangeOutput) {
  std::ostringstream csv;
  csv << "kind,label,payload\n";
  for (int p = -5; p <= 5; p += 2)
    for (int q = -5; q <= 5; q += 2) csv << "pretzel,P" << p << q << ',' << p << ',' << q << ",3\n";
  csv << "pd,trefoil,\"X(1,4,2,5); X(3,6,4,1); X(5,2,6,3)\"\n";
  std::istringstream a(csv.str()), b(csv.str());
  auto serial = batch_to_json(run_batch(read_batch_csv(a), {}, 1));
  auto parallel = batch_to_json(run_batch(read_batch_csv(b), {}, 6));
  EXPECT_EQ(serial.dump(), parallel.dump());
}

TEST(Batch, WritesOutputFile) {
  std::string path = temp_path("batch_out.json");
  std::ostringstream out;
  ASSERT_EQ(cmd_batch(std::string(KNOTOB_SAMPLES_DIR) + "/sample_batch.csv", path, 2, out), 0);
  EXPECT_EQ(out.str(), "rows 3: HoldsNontrivialAlexander 1, HoldsMod16 1, Inconclusive 1, errors 0\n");
  std::ifstream file(path);
  auto j = nlohmann::json::parse(file);
  EXPECT_EQ(j["rows"].size(), 3U);
  std::remove(path.c_str());
}

TEST(Batch, MissingInput) {
  std::ostringstream out;
  EXPECT_THROW(cmd_batch(temp_path("does_not_exist.csv"), "-", 1, out), std::runtime_error);
}

TEST(Selftest, FilteredSuites) {
  std::ostringstream out;
  EXPECT_EQ(cmd_selftest({"family"}, false, out), 0);
  std::string text = out.str();
  EXPECT_EQ(text.rfind("[PASS] family", 0), 0U) << text;
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
  EXPECT_THROW(run_selftest({"nope"}), ValidationError);
}

TEST(Selftest, FlippedSmoothingFailsTrefoil) {
  std::ostringstream out;
  EXPECT_EQ(cmd_selftest({"trefoil"}, true, out), 1);
  EXPECT_NE(out.str().find("[FAIL] trefoil"), std::string::npos);
}
