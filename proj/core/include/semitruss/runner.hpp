#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semitruss/congruence.hpp"
#include "semitruss/solution.hpp"

namespace semitruss {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "semitruss";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Command {
  check,
  derive,
  monoid,
  congruence,
  quotient,
  search,
  catalog_cmd,
  verify_all
};

enum class OutputFormat { json, text };

// One CLI invocation. input is a file path, "catalog:NAME", or "catalog:all".
struct RunConfig {
  Command command = Command::check;
  std::string input;
  int degree = 4;
  std::vector<int> slacks = {0, 1, 2};
  std::vector<CongruenceKind> kinds = {CongruenceKind::eta, CongruenceKind::nu,
                                       CongruenceKind::mu};
  OutputFormat format = OutputFormat::json;
  std::string output_path;          // empty: caller prints rendered
  std::string emit_solution_path;   // derive/quotient: write solution file
  int64_t budget = 1000000;
  bool timings = true;
  int search_n = 2;
  SolutionFilter require;  // search command
};

// Exit codes: 0 all checks passed, 1 a mathematical check failed (witness in
// the report), 2 usage or input error, 3 inconclusive only.
struct RunResult {
  int exit_code = 0;
  std::string rendered;  // report in the requested format
};

// Executes the command and renders the report. Writes output_path /
// emit_solution_path when set. Usage and input problems surface as exit code
// 2 with the reason in the rendered report. Deterministic byte-for-byte when
// timings is false.
RunResult run(const RunConfig& config);

// Comma-separated profile requirements, e.g.
// "left_nondegenerate,bijective,!involutive". Throws Error on unknown names.
SolutionFilter parse_filter(const std::string& csv);

// Comma-separated subset of eta,nu,mu. Throws Error on unknown names.
std::vector<CongruenceKind> parse_kinds(const std::string& csv);

}  // namespace semitruss
