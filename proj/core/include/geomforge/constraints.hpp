#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace geomforge {

class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters of a primitive rank 3 graph (the Delta-graph) with eigenvalues r > s.
struct Rank3Params {
  long long k = 0;
  long long l = 0;
  long long lambda = 0;
  long long mu = 0;
  long long r = 0;
  long long s = 0;
};

/// Solves r + s = lambda - mu and rs = mu - k for integers r > s and checks
/// k(k - lambda - 1) = l mu. Throws ConstraintError on degenerate parameters,
/// a failed identity or non-integral eigenvalues.
Rank3Params rank3_from_graph(long long k, long long l, long long lambda, long long mu);

/// Whether lambda = k + r + rs holds literally (it generally does not; the
/// implemented identity is lambda = mu + r + s).
bool printed_lambda_formula_holds(const Rank3Params& p);

enum class Rank4Condition { Pass, Precondition, Split, PhiUnique, PhiDivides, KlDivides };
std::string to_string(Rank4Condition c);

/// One choice of which eigenvalue of the Delta-graph splits under the rank 4 subgroup.
struct Rank4Side {
  std::string split;              // "r" or "s"
  Rank4Condition failed = Rank4Condition::Pass;
  long long split_value = 0;      // eigenvalue that splits (plays the role of r)
  long long other_value = 0;      // the remaining eigenvalue (plays the role of s)
  // phi = -j(other+1)/l as a reduced fraction
  long long phi_num = 0;
  long long phi_den = 1;
};

struct Rank4Verdict {
  bool feasible = false;
  /// First side that passes all four conditions, if any.
  std::optional<std::string> passing_side;
  std::vector<Rank4Side> sides;  // r-side first, then s-side
  std::string reason;
};

/// Checks the four rank 4 split conditions for j = |Gamma_1(x)| and
/// jt = |Gamma_1(x) cap Delta(y)| (y in Gamma_2(x)), trying both eigenvalue sides.
Rank4Verdict rank4_feasible(const Rank3Params& p, long long j, long long jt);

struct Section13Row {
  int q = 0;
  int h = 0;
  int m = 0;
  long long rhs = 0;          // (q - 1) h (q - h)
  long long minus_term = 0;   // q^(m-1) - 1
  long long plus_term = 0;    // q^(m-1) + 1
  bool divides_minus = false;
  bool divides_plus = false;
  /// Result of the full kl | j(l-j) r(s+1) test when it fits in 128 bits.
  std::optional<bool> direct_minus;
  std::optional<bool> direct_plus;
  bool eliminated() const { return !divides_minus && !divides_plus; }
};

/// The five (q, h) pairs left for the symplectic case.
std::vector<std::pair<int, int>> section13_pairs();
/// Evaluates q^(m-1) -+ 1 | (q-1)h(q-h) for each pair and m in [m_lo, m_hi].
std::vector<Section13Row> section13_eliminate(int m_lo, int m_hi,
                                              const std::vector<std::pair<int, int>>& pairs = section13_pairs());
std::string section13_csv(const std::vector<Section13Row>& rows);

enum class ZsigmondyOutcome { Primitive, MersenneK2, QK64 };
std::string to_string(ZsigmondyOutcome o);

struct ZsigmondyResult {
  long long q = 0;
  int k = 0;
  ZsigmondyOutcome outcome = ZsigmondyOutcome::Primitive;
  long long prime = 0;  // least primitive prime divisor when outcome is Primitive
};

/// Least prime r | q^k - 1 with r not dividing p^i - 1 for 1 < p^i < q^k.
ZsigmondyResult zsigmondy(long long q, int k);
/// Prime factors of n (ascending, distinct), trial division.
std::vector<long long> prime_factors(unsigned long long n);

enum class Case31 { CaseI, CaseII, Infeasible };
std::string to_string(Case31 c);

struct Case31Result {
  Case31 which = Case31::Infeasible;
  bool identity_holds = false;
  std::string reason;
};

/// Evaluates (q^m - q)(q^m - q^f1) = (q^h - q^m)(q^e2 - 1), then classifies:
/// case (i) m-1 = e2, h-m = 1; case (ii) m-1 = h-m, e2 = 1 with m-2 | m-1.
Case31Result classify_31_case(long long q, int m, int h, int f1, int e2);

}  // namespace geomforge
