#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kasami/analysis.hpp"

namespace kasami {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Result of one CLI command. Everything here is deterministic for fixed
/// parameters; wall-clock timing is kept separately and never rendered.
struct RunReport {
  std::string command;
  int m = 0;
  std::optional<int> b;
  std::uint64_t modulus = 0;
  std::optional<WeightEnumerator> enumerator;
  std::vector<std::pair<std::string, std::string>> values;  // ordered key/value results
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool ok() const noexcept;
  /// First failing check, if any.
  const CheckResult* first_failure() const noexcept;
};

struct CommandOptions {
  int m = 2;
  int b = 2;
  int b_max = 0;  // verify: 0 means n
  std::optional<std::uint64_t> modulus;
  unsigned workers = 0;
  std::optional<int> max_m;           // exhaustive-scan cap override
  std::optional<std::uint64_t> sample;  // verify: sampled codewords instead of all
  std::uint64_t seed = 1;
  std::optional<std::string> codeword;  // shorten: explicit c0 as a 0/1 string
  bool inject_fault = false;            // verify: perturb one closed-form value (tests only)
};

RunReport cmd_table(const CommandOptions& opts);
RunReport cmd_verify(const CommandOptions& opts);
RunReport cmd_bounds(const CommandOptions& opts);
RunReport cmd_mb(const CommandOptions& opts);
RunReport cmd_shorten(const CommandOptions& opts);

enum class Format { Text, Json, Csv };

std::string render(const RunReport& report, Format format);

/// 0 when every check passed, 2 otherwise.
int exit_code(const RunReport& report) noexcept;

}  // namespace kasami
