#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rieszkit/config.hpp"
#include "rieszkit/report.hpp"

namespace rieszkit::cli {

// Unknown subcommand, bad flag value and the like. Maps to exit code 1.
class UsageError : public DomainError {
 public:
  using DomainError::DomainError;
};

const std::vector<std::string>& command_names();

// What one subcommand produced: a CSV table and a text table (often a digest of the CSV).
struct CommandOutput {
  Table csv;
  Table text;
  std::vector<std::string> warnings;
};

// Runs `command` with its [command] section of `config`. Pure: no files touched.
CommandOutput execute(const std::string& command, const Config& config, int threads);

struct RunOptions {
  std::string command;
  std::filesystem::path config;
  std::optional<std::filesystem::path> out_dir;  // overrides [output] dir
  int threads = 1;
};

struct RunResult {
  std::filesystem::path csv;
  std::filesystem::path text;
  std::filesystem::path manifest;
  std::vector<std::string> warnings;
};

// Parses the config, executes, and writes <out>/<command>.csv, .txt and .manifest.
// Only the manifest carries run metadata (time, duration, thread count).
RunResult run(const RunOptions& options);

// Exit status for an exception escaping run(): 1 for usage/config/domain errors, 2 for
// numerical failures and anything else unexpected.
int exit_code_for(const std::exception& e);

}  // namespace rieszkit::cli
