#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geomforge/field.hpp"
#include "geomforge/polar.hpp"
#include "geomforge_cli/report.hpp"

namespace geomforge::cli {

/// Exhaustive field-axiom check; returns a description of the first violation.
std::optional<std::string> field_axiom_violation(const Field& F);

Report run_field(int q);
Report run_polar(PolarType type, int n, int q, bool full_report);
Report run_ngon(const std::string& path, bool allow_thin);

struct HexagonOptions {
  int q = 2;
  bool verify = false;
  bool stabilizer = false;
  std::optional<std::string> export_path;
};
Report run_hexagon(const HexagonOptions& opt);

/// checks: any of order, rank, antiflag, line, blocks, chain.
Report run_group(const std::string& preset, const std::vector<std::string>& checks);

Report run_rank3(long long k, long long l, long long lambda, long long mu);
Report run_rank4(long long k, long long l, long long lambda, long long mu, long long j, long long jt);
Report run_zsigmondy(long long q, int k);
/// Outcome name predicted by the exception list: mersenne_k2 for prime q = 2^a - 1
/// with k = 2, q_k_64 when q^k = 64, primitive otherwise.
std::string zsigmondy_expected_outcome(long long q, int k);
/// Fills *csv with the elimination table when csv is non-null.
Report run_section13(int m_lo, int m_hi, std::string* csv = nullptr);
Report run_case31(long long q, int m, int h, int f1, int e2);

/// name: a9, omega7 or semilinear.
Report run_showcase(const std::string& name);

}  // namespace geomforge::cli
