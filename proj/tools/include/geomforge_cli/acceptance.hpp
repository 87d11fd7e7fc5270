#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geomforge_cli/report.hpp"

namespace geomforge::cli {

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<std::string> tags;
  /// Wall-clock budget; exceeding it fails the criterion.
  std::optional<long long> limit_ms;
};

struct CriterionResult {
  Criterion criterion;
  bool pass = false;
  Json detail;              // deterministic summary of what was checked
  std::string failure;      // first failed check, empty on success
  long long elapsed_ms = 0;
};

const std::vector<Criterion>& acceptance_criteria();
/// Criteria carrying the tag, or all of them when tag is empty. Throws
/// std::invalid_argument for a tag no criterion carries.
std::vector<Criterion> select_criteria(const std::string& tag);
CriterionResult run_criterion(const Criterion& c);

/// One verdict per criterion, ordered by id.
Report acceptance_report(const std::vector<CriterionResult>& results, const std::string& tag);
/// "criterion  3 [PASS] title (1234 ms)" plus the failure, if any.
std::string summary_line(const CriterionResult& r);

}  // namespace geomforge::cli
