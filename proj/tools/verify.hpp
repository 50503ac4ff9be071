#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace stanleychar::cli {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// Machine-readable description of the first mismatch (null if none).
  nlohmann::json first_mismatch;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool all_passed() const { return failed() == 0; }

  /// One line per check plus a summary line. Contains no timing or thread
  /// information, so identical inputs give byte-identical reports.
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Suite names accepted by run_verification, "all" included.
const std::vector<std::string>& suite_names();

/// Runs the cross-checks of one suite with characters of degree up to kmax.
/// Throws std::invalid_argument for an unknown suite.
VerifyReport run_verification(const std::string& suite, int kmax, unsigned threads);

}  // namespace stanleychar::cli
