#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "idealkit/problem.hpp"

namespace idealkit {

using Json = nlohmann::ordered_json;

// Bad command line or a request the chosen regime cannot serve. Exit 1, no report.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunOptions {
  std::optional<unsigned> n, n_max, window;
  std::optional<int> witness_bound;
  std::optional<std::string> order;
  // symbolic-power: "I" or "J" (default J)
  std::optional<std::string> ideal;
  std::uint64_t seed = 0;
  unsigned count = 25;
  std::vector<std::string> suites;  // verify-lemmas; empty means all
  bool verify = true;
  bool timings = false;
  bool inject_failure = false;
  bool update_golden = false;
  std::string data_dir;
};

std::vector<std::string> problem_commands();

// Reports share one layout:
//   schema, command, task, regime, result, checks[{name, pass, detail?}],
//   verdict ("PASS" / "FAIL"), timings_ms (only with --timings).
// A VerificationFailure raised by an inner module becomes a failing check.
Json run_problem_command(std::string_view command, const ProblemFile& problem, const RunOptions& options);
Json run_verify_lemmas(const RunOptions& options);
// `examples run <name>`: problem file <data_dir>/problems/<name>.txt, golden
// report <data_dir>/golden/<name>_n<n>.json.
Json run_example(std::string_view name, const RunOptions& options);

// Same problem with its ring switched to another order.
ProblemFile with_order(const ProblemFile& problem, std::string_view order);

bool report_passed(const Json& report);
std::string render_human(const Json& report);
std::string render_json(const Json& report);

struct Invocation {
  std::string command;
  std::string target;  // problem file path, or the example name
  RunOptions options;
  bool json = false;
};

struct Outcome {
  int exit_code = 0;  // 0 pass, 2 verification failure, 1 usage error
  std::string out;
  std::string err;
};

Outcome execute(const Invocation& invocation);

}  // namespace idealkit
