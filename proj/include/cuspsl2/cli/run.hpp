#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cuspsl2/errors.hpp"

namespace cuspsl2::cli {

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::uint32_t p = 5;
  int level = 1;
  int precision = 8;
  int truncation = 1;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;  // empty: standard output
};

// Throws ConfigError.
void validate(const RunConfig& cfg);

const std::vector<std::string>& subcommands();

struct RunResult {
  bool passed;
  std::string report;
};

// Throws ConfigError for bad configurations and unknown subcommands.
RunResult run(const std::string& subcommand, const RunConfig& cfg);

enum ExitCode : int { kPass = 0, kFail = 1, kConfigError = 2 };

}  // namespace cuspsl2::cli
