#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "knotob/cli.hpp"

int main(int argc, char** argv) {
  using namespace knotob;
  CLI::App app{"Knot invariants and cosmetic-crossing obstructions for genus-one knots"};
  app.require_subcommand(1);

  cli::InputFlags flags;
  bool json = false;
  auto add_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--pretzel", flags.pretzel, "pretzel parameters p,q,r (odd)");
    cmd->add_option("--pd", flags.pd, "PD code, e.g. \"X(1,4,2,5); X(3,6,4,1); X(5,2,6,3)\"");
    cmd->add_option("--seifert", flags.seifert, "Seifert matrix rows, e.g. \"6,4;3,2\"");
    cmd->add_option("--spine", flags.spine, "genus-one spine n,m,ell,eps");
    cmd->add_option("--jones", flags.jones, "Jones polynomial for --spine, e.g. \"-t^4 + t^3 + t\"");
    cmd->add_option("--tinv", flags.tinv, "tangle invariants v2xx,v2yy,v2xy,v3 for --spine");
    cmd->add_flag("--json", json, "emit JSON");
  };

  auto* invariants = app.add_subcommand("invariants", "print the invariants of one knot");
  add_inputs(invariants);
  auto* obstruct = app.add_subcommand("obstruct", "print the cosmetic-crossing verdict for one knot");
  add_inputs(obstruct);

  std::int64_t k_min = 1, k_max = 8, jones_upto = 0;
  bool csv = false;
  auto* scan = app.add_subcommand("pretzel-scan", "sweep P(4k+1, 4k+3, -(2k+1))");
  scan->add_option("--k-min", k_min, "first k")->capture_default_str();
  scan->add_option("--k-max", k_max, "last k")->capture_default_str();
  scan->add_option("--jones-upto", jones_upto, "also run the Jones route for k up to this value")->capture_default_str();
  scan->add_flag("--csv", csv, "emit CSV");

  std::string input_path, output_path;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  auto* batch = app.add_subcommand("batch", "evaluate every row of a CSV knot list");
  batch->add_option("--input", input_path, "CSV with header kind,label,payload...")->required();
  batch->add_option("--output", output_path, "JSON output file (stdout when omitted)");
  batch->add_option("--workers", workers, "rows evaluated concurrently");

  std::vector<std::string> suites;
  bool flip = false;
  auto* selftest = app.add_subcommand("selftest", "run the embedded oracle suites");
  selftest->add_option("--suite", suites, "restrict to these suites")
      ->check(CLI::IsMember(knotob::selftest_suite_names()));
  selftest->add_flag("--flip-smoothing", flip, "debug: swap the A/B smoothings in the state sum");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*invariants) return cli::cmd_invariants(flags, json, std::cout);
    if (*obstruct) return cli::cmd_obstruct(flags, json, std::cout);
    if (*scan) return cli::cmd_pretzel_scan(k_min, k_max, jones_upto, csv, std::cout);
    if (*batch) return cli::cmd_batch(input_path, output_path, workers, std::cout);
    if (*selftest) return cli::cmd_selftest(suites, flip, std::cout);
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
