#pragma once

/// @file suites.hpp
/// @brief Randomized verification suites behind the dvbcheck harness.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dvb/jets.hpp"

namespace dvb::verify {

/// Thrown for configurations the harness refuses to run.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All suite ids in report order ("all" runs them in exactly this order).
const std::vector<std::string>& suite_ids();

struct SuiteConfig {
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::optional<int> trials;  ///< per-suite default when unset
  int dim_base = 5;
  double tol_exact = 1e-12;
  double tol_fd = 1e-6;
  bool negative_controls = false;
};

/// Throws UsageError for unknown suites, non-positive trials, dims or tolerances.
void validate(const SuiteConfig& cfg);

int default_trials(std::string_view suite);

struct FailureRecord {
  nlohmann::json inputs;
  double residual = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_ms = 0.0;
  std::size_t failure_count = 0;
  std::vector<FailureRecord> failures;  ///< first failures, capped at kMaxFailureRecords
};

inline constexpr std::size_t kMaxFailureRecords = 10;

// Tolerances for Poisson identities: one jet pass is exact up to rounding,
// nested second derivatives accumulate more.
inline constexpr double kJacobiTolerance = 1e-10;
inline constexpr double kAnchorTolerance = 1e-8;

/// Runs one suite (not "all").
SuiteReport run_suite(const SuiteConfig& cfg);

/// Runs cfg.suite, expanding "all" into every suite in suite_ids() order.
std::vector<SuiteReport> run(const SuiteConfig& cfg);

enum class ReportFormat { kText, kJson };

nlohmann::json to_json(const SuiteReport& r);

/// One JSON document (a suite block, or for "all" an object holding every
/// block), or text with one line per suite plus failure lines.
std::string emit_report(const std::vector<SuiteReport>& reports, ReportFormat format, std::string_view requested);

/// 0 when every report passes, 1 otherwise.
int exit_code(const std::vector<SuiteReport>& reports);

// The frozen witness on which the non-Poisson control fails: coordinate
// functions f = y0, g = y1, h = y2 at (1, 1, 1). There the Jacobiator is -1
// and #[dy0, dy1] - [#dy0, #dy1] = (0, 0, 1).
Vec negative_control_witness_point();

}  // namespace dvb::verify
