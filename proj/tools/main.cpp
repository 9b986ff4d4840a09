#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "semitruss/runner.hpp"

namespace {

struct RawOptions {
  std::string input;
  int degree = 4;
  std::string slack = "0,1,2";
  std::string kinds = "eta,nu,mu";
  std::string format = "json";
  std::string output;
  std::string emit_solution;
  int64_t budget = 1000000;
  bool no_timings = false;
  int n = 2;
  std::string require;
};

void add_common(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--degree", raw.degree, "Degree budget D");
  cmd->add_option("--slack", raw.slack, "Comma-separated slack list");
  cmd->add_option("--kinds", raw.kinds, "Comma-separated subset of eta,nu,mu");
  cmd->add_option("--format", raw.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--output", raw.output, "Write the report to this path");
  cmd->add_option("--budget", raw.budget, "Word budget per degree");
  cmd->add_flag("--no-timings", raw.no_timings,
                "Omit the timings block for byte-stable reports");
}

std::vector<int> parse_slacks(const std::string& csv) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char ch : csv) {
    if (ch == ',') flush();
    else if (ch != ' ') cur += ch;
  }
  flush();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure monoids, cancellative congruences, and quotient "
               "solutions of finite Yang-Baxter maps"};
  app.require_subcommand(1);
  RawOptions raw;
  semitruss::Command command = semitruss::Command::check;

  auto* check = app.add_subcommand("check", "Validate tables and profile");
  check->add_option("input", raw.input, "Solution file or catalog:NAME")
      ->required();
  auto* derive =
      app.add_subcommand("derive", "Left derived solution of the input");
  derive->add_option("input", raw.input, "Solution file or catalog:NAME")
      ->required();
  derive->add_option("--emit-solution", raw.emit_solution,
                     "Write the derived solution to this path");
  auto* monoid =
      app.add_subcommand("monoid", "Class counts of both graded monoids");
  monoid->add_option("input", raw.input, "Solution file or catalog:NAME")
      ->required();
  auto* congruence = app.add_subcommand(
      "congruence", "Stabilization reports and pairwise comparisons");
  congruence->add_option("input", raw.input, "Solution file or catalog:NAME")
      ->required();
  auto* quotient = app.add_subcommand(
      "quotient", "Quotient by mu with semi-truss and bar_r verification");
  quotient->add_option("input", raw.input, "Solution file or catalog:NAME")
      ->required();
  quotient->add_option("--emit-solution", raw.emit_solution,
                       "Write the induced degree-1 solution to this path");
  auto* search =
      app.add_subcommand("search", "Enumerate solutions on n letters");
  search->add_option("--n", raw.n, "Letter count (1..3)");
  search->add_option("--require", raw.require,
                     "Profile requirements, e.g. bijective,!involutive");
  auto* catalog = app.add_subcommand("catalog", "List built-in solutions");
  auto* verify = app.add_subcommand(
      "verify-all", "Run every property suite the input qualifies for");
  verify->add_option("input", raw.input,
                     "Solution file or catalog:NAME (default catalog:all)");

  for (CLI::App* cmd :
       {check, derive, monoid, congruence, quotient, search, catalog, verify})
    add_common(cmd, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (check->parsed()) command = semitruss::Command::check;
  else if (derive->parsed()) command = semitruss::Command::derive;
  else if (monoid->parsed()) command = semitruss::Command::monoid;
  else if (congruence->parsed()) command = semitruss::Command::congruence;
  else if (quotient->parsed()) command = semitruss::Command::quotient;
  else if (search->parsed()) command = semitruss::Command::search;
  else if (catalog->parsed()) command = semitruss::Command::catalog_cmd;
  else if (verify->parsed()) command = semitruss::Command::verify_all;

  semitruss::RunConfig config;
  config.command = command;
  config.input = raw.input;
  config.degree = raw.degree;
  config.format = raw.format == "text" ? semitruss::OutputFormat::text
                                       : semitruss::OutputFormat::json;
  config.output_path = raw.output;
  config.emit_solution_path = raw.emit_solution;
  config.budget = raw.budget;
  config.timings = !raw.no_timings;
  config.search_n = raw.n;
  try {
    config.slacks = parse_slacks(raw.slack);
    config.kinds = semitruss::parse_kinds(raw.kinds);
    config.require = semitruss::parse_filter(raw.require);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  semitruss::RunResult result = semitruss::run(config);
  if (config.output_path.empty()) std::cout << result.rendered;
  return result.exit_code;
}
