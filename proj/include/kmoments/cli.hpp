#pragma once

// Batch front-end shared by the kmoments executable and the tests.

#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kmoments/codes.hpp"
#include "kmoments/gf2r.hpp"
#include "kmoments/serialize.hpp"

namespace kmoments::cli {

enum ExitStatus : int { kOk = 0, kUsage = 1, kMismatch = 2 };

/// Largest r accepted by commands that run the weight-distribution DP.
inline constexpr unsigned kMaxDpDegree = 12;
/// Largest r for which full (untruncated) distributions are produced.
inline constexpr unsigned kMaxFullDegree = 8;
/// Largest r for which every trace-one b is swept in the exponential-sum check.
inline constexpr unsigned kMaxAllBDegree = 8;
inline constexpr unsigned kMaxHmax = 32;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  unsigned r_min = 3;
  unsigned r_max = 3;
  std::optional<Polynomial> modulus;
  std::optional<Element> b;
  unsigned h_max = 10;
  std::vector<Code> codes{kAllCodes.begin(), kAllCodes.end()};
  std::optional<std::size_t> j_max;
  io::Format format = io::Format::pretty;
  std::string out_path;  // empty: standard output

  /// Throws UsageError.
  void validate() const;
};

/// "5" or "3..6" (inclusive). Throws UsageError.
std::pair<unsigned, unsigned> parse_r_range(std::string_view text);

/// "1,3,4". Throws UsageError.
std::vector<Code> parse_codes(std::string_view text);

/// The field for one r of the sweep with the configured overrides applied.
Field make_field(const RunConfig& config, unsigned r);

// Each command writes its table to `out` and diagnostics to `err`, and
// returns an ExitStatus.
int cmd_moments(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_weights(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_kloosterman(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches to a command.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kmoments::cli
