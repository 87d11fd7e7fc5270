#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geomforge/linear.hpp"

namespace geomforge {

enum class FormKind { Symplectic, Quadratic, Hermitian };

/// Classical polar space types, named after their isometry groups.
enum class PolarType {
  Symplectic,      // Sp(2r, q)
  OrthogonalPlus,  // O+(2r, q)
  OrthogonalOdd,   // O(2r+1, q)
  OrthogonalMinus, // O-(2r+2, q)
  Unitary,         // U(n, q0) over GF(q0^2)
};

std::string to_string(PolarType t);
/// Accepts "Sp", "O+", "O-", "O", "U" (case-insensitive aliases included).
PolarType parse_polar_type(const std::string& s);

class PolarError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A reflexive sesquilinear form, or a quadratic form together with its polarization.
///  - Symplectic: B(x, y) = x G y^T with G alternating.
///  - Quadratic: phi(x) = sum_{i<=j} Q_ij x_i x_j, B(x, y) = phi(x+y) - phi(x) - phi(y).
///  - Hermitian: B(x, y) = x G (y^s)^T with s: a -> a^q0 and G = (G^s)^T.
class Form {
 public:
  static Form symplectic(Field F, Matrix gram);
  static Form quadratic(Field F, Matrix upper);
  /// q0 must satisfy q0^2 = |F|.
  static Form hermitian(Field F, Matrix gram, int q0);

  FormKind kind() const { return kind_; }
  const Field& field() const { return field_; }
  int dim() const { return n_; }
  /// Gram matrix of the bilinear/sesquilinear form B.
  const Matrix& gram() const { return gram_; }
  /// Upper-triangular coefficients of phi (quadratic forms only).
  const Matrix& quadratic_coeffs() const { return quad_; }
  int conjugation_order() const { return q0_; }
  /// Frobenius exponent k with a^q0 = a^(p^k); 0 unless hermitian.
  int conjugation_power() const { return conj_power_; }

  Fe bilinear(const Vec& x, const Vec& y) const;
  /// phi(x) for quadratic forms.
  Fe quadratic(const Vec& x) const;
  /// Singular (quadratic) or isotropic (symplectic, hermitian) vector.
  bool is_isotropic(const Vec& x) const;
  /// Rows r with B(s, y) = r . y, one per input vector; perps are null spaces of these rows.
  Matrix perp_rows(const Matrix& vectors) const;
  /// Radical of B.
  Subspace radical() const;

 private:
  Form(FormKind kind, Field F, int n) : kind_(kind), field_(std::move(F)), n_(n) {}

  FormKind kind_;
  Field field_;
  int n_;
  Matrix gram_;
  Matrix quad_;
  int q0_ = 0;
  int conj_power_ = 0;
};

/// Standard forms in hyperbolic-plus-tail normal form:
///   Sp(n): B = sum (x_{2i-1} y_{2i} - x_{2i} y_{2i-1})
///   O+(n): phi = sum x_{2i-1} x_{2i}
///   O(n), n odd: phi = x_0^2 + sum x_{2i-1} x_{2i}
///   O-(n): phi = sum x_{2i-1} x_{2i} + x_a^2 + x_a x_b + alpha x_b^2
///   U(n, q0): B = sum x_i y_i^q0
/// For Unitary the field is GF(q0^2); `q` is q0.
Form standard_form(PolarType type, int n, int q);
/// Least alpha (by index) with t^2 + t + alpha irreducible over F.
Fe minus_type_alpha(const Field& F);

/// Type constant c of the |T^perp - W^perp| = q^(2r - i + c) count, stored as 2c.
int type_constant_twice(PolarType type, int n);
/// Closed-form number of isotropic/singular points.
std::uint64_t expected_point_count(PolarType type, int n, int q);
/// Witt index predicted for the standard form.
int expected_rank(PolarType type, int n);

class PolarSpace {
 public:
  /// Standard form of the given type. `q` is q0 for Unitary.
  static PolarSpace standard(PolarType type, int n, int q);
  /// Polar space of a supplied form; the rank is computed and the type is
  /// checked against it (r, c, |Omega|).
  static PolarSpace from_form(PolarType type, Form form);

  PolarType type() const { return type_; }
  const Form& form() const { return form_; }
  const Field& field() const { return form_.field(); }
  int ambient_dim() const { return form_.dim(); }
  /// Order of the field the geometry is named over: q, or q0 for Unitary.
  int q() const { return q_; }
  int rank() const { return rank_; }
  /// 2c for the type constant.
  int type_constant_twice() const { return c2_; }
  /// Canonical list of isotropic/singular points (Omega).
  const PointSet& points() const { return points_; }
  /// A maximal t.s. subspace found by greedy extension (its dimension is the rank).
  const Subspace& witness_maximal() const { return witness_; }

  Subspace perp(const Subspace& s) const;
  bool perpendicular(const Vec& x, const Vec& y) const;
  bool is_singular(const Subspace& s) const;
  /// Greedy maximal t.s. subspace containing s.
  Subspace extend_to_maximal(const Subspace& s) const;
  /// All t.s. subspaces of dimension k (canonically ordered), built level by level.
  std::vector<Subspace> totally_singular(int k) const;
  std::vector<Subspace> max_ts_subspaces() const { return totally_singular(rank_); }

  /// q^(2r - i + c), in units of the field order |F|.
  std::uint64_t expected_9_2(int i) const;

 private:
  PolarSpace(PolarType type, Form form, int q);

  PolarType type_;
  Form form_;
  int q_;
  int rank_ = 0;
  int c2_ = 0;
  PointSet points_;
  Subspace witness_;
};

struct SolidFamilies {
  std::vector<Subspace> family_a;  // contains the canonically first solid
  std::vector<Subspace> family_b;
};

/// Splits the maximal t.s. subspaces of an O+(2r, q) space by the parity of
/// intersection dimension, and validates the partition. Throws PolarError on
/// non-O+ input or a failed validation.
SolidFamilies solid_families(const PolarSpace& P);

struct Verify92Result {
  bool passed = true;
  int i = 0;
  std::uint64_t expected = 0;
  int chains_tested = 0;
  std::uint64_t first_count = 0;
  /// First failing chain: (T, W), if any.
  std::optional<std::pair<Subspace, Subspace>> counterexample;
  std::uint64_t counterexample_count = 0;
};

/// Counts Omega points in T^perp - W^perp for t.s. chains T < W of dims (i-1, i)
/// taken from several maximal t.s. subspaces, against q^(2r - i + c).
Verify92Result verify_9_2(const PolarSpace& P, int i, int max_chains = 4);

struct SpOBijection {
  PolarSpace orthogonal;  // O(2m+1, q)
  PolarSpace symplectic;  // Sp(2m, q) on the quotient by the radical
  int dropped_coordinate = 0;
  /// orthogonal point id -> symplectic point id
  std::vector<int> point_map;
  int orthogonal_lines = 0;
  int symplectic_lines = 0;
  bool bijective = false;
  bool lines_correspond = false;
};

/// Singular points of an odd-dimensional orthogonal space over even q, projected
/// modulo the radical of the polar form onto the symplectic quotient.
/// Throws PolarError for odd q.
SpOBijection sp_o_bijection(int q, int m);
/// Same construction for any parabolic polar space over even q.
SpOBijection sp_o_bijection(const PolarSpace& orthogonal);
/// Projection of a vector onto the quotient coordinates (drop `coordinate`).
Vec drop_coordinate(const Vec& v, int coordinate);

enum class Theorem103Status { Recovered, HypothesisViolated, NoVector };

struct Theorem103Result {
  Theorem103Status status = Theorem103Status::NoVector;
  std::optional<Vec> v;                    // nonsingular vector with Phi = Omega cap v^perp
  std::optional<Subspace> witness_solid;   // violating maximal t.s. subspace
};

/// Checks that Phi meets every maximal t.s. subspace in an (r-1)-space and, if
/// so, searches the nonsingular points for v with Phi = Omega cap v^perp.
/// `phi` holds point ids into P.points(). Requires O+ with r >= 3.
Theorem103Result theorem_10_3_check(const PolarSpace& P, const std::vector<int>& phi);

struct GridCount {
  std::uint64_t hypothesis_sets = 0;
  std::uint64_t conics = 0;
};

/// For the O+(4, q) grid: counts point sets meeting every t.s. line in one
/// point, and how many of them are of the form Omega cap v^perp.
GridCount rank2_hypothesis_sets(int q);

}  // namespace geomforge
