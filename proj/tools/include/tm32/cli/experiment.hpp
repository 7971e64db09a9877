#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace tm32::cli {

struct ExperimentConfig {
  std::string word = "t32";
  std::size_t length = 1'000'000;
  unsigned mod_exp = 2;
  std::size_t max_factor_len = 12;
  std::size_t parity_factor_len = 8;
  std::size_t monitor_length = 10'000'000;
  double frequency_tolerance = 0.002;
  double monitor_tolerance = 0.05;
  double experimental_tolerance = 0.05;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool experimental = false;
  // Empty means every hard and soft check.
  std::vector<std::string> checks;
  // Inclusive N ranges for the running-density CSV.
  std::vector<std::pair<std::size_t, std::size_t>> ranges = {{1, 2000}, {14000, 15000}};

  // Throws ErrorKind::InvalidParameter.
  void validate() const;
};

enum class CheckKind { Hard, Soft, Experimental };

struct CheckResult {
  std::string name;
  CheckKind kind = CheckKind::Hard;
  bool passed = false;
  std::string detail;
  std::vector<std::string> witnesses;
};

struct VerifyReport {
  static constexpr int kSchemaVersion = 1;
  std::vector<CheckResult> checks;
  // True iff every hard check passed.
  bool passed() const;
};

std::vector<std::string> check_names(CheckKind kind);
// Throws ErrorKind::NotFound for an unknown check name.
VerifyReport run_verify_suite(const ExperimentConfig& config);

std::string to_json(const ExperimentConfig& config, const VerifyReport& report);
std::string to_string(CheckKind kind);

// Columns: range,N,count,density with count = C_0(0,0,N) for the configured
// word. Ranges with lo > hi contribute no rows.
void emit_frequency_csv(const ExperimentConfig& config, std::ostream& out);

}  // namespace tm32::cli
