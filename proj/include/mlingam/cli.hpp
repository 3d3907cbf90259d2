#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mlingam/model.hpp"

namespace mlingam {

// Exit codes shared by run() and the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

struct RunConfig {
  enum class Command { Estimate, Simulate, CheckGaussian };
  enum class Format { Table, JsonLines };

  Command command = Command::Estimate;
  std::string input_path;
  std::vector<std::string> pair;  // exactly two column names when set
  bool all_pairs = false;
  std::size_t samples = 1000;
  PriorFamily prior = PriorFamily::StudentT;
  ErrorFamily errors = ErrorFamily::Laplace;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool fast = false;  // reduced non-canonical grid profile
  Format format = Format::Table;

  // simulate only
  std::size_t trials = 0;
  std::size_t n = 0;
  std::size_t q = 0;
};

// Executes one command. All results are buffered and written to `out` only on
// success; diagnostics and timing go to `err`. Returns an exit code: 0 ok,
// 2 validation error, 3 numerical failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace mlingam
