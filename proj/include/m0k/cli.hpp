#pragma once

#include <optional>
#include <string>
#include <vector>

namespace m0k {

struct JobConfig {
  std::string command;
  std::string input_path;
  std::string format = "text";  // text | json | csv
  int threads = 1;
  int max_labels = 8;
  bool all_codims = false;        // strata
  std::optional<int> codim;       // strata
  std::optional<long> q;          // pointcount
  std::vector<std::string> args;  // subcommand positionals
};

struct RunResult {
  int exit_code = 0;   // 0 ok, 1 usage, 2 validation, 3 size guard, 4 internal
  std::string output;  // goes to stdout
  std::string error;   // goes to stderr
};

/// Executes one job; output is byte-deterministic for a fixed config,
/// including across thread counts.
RunResult run(const JobConfig& config);

}  // namespace m0k
