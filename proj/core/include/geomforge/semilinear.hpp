#pragma once

#include <optional>
#include <string>

#include "geomforge/linear.hpp"
#include "geomforge/polar.hpp"

namespace geomforge {

/// v -> (v^(p^k)) M: the field automorphism is applied coordinatewise first.
struct SemilinearMap {
  Matrix m;
  int k = 0;

  friend bool operator==(const SemilinearMap&, const SemilinearMap&) = default;
};

SemilinearMap linear_map(Matrix m);
SemilinearMap identity_map(const Field& F, int n);
/// Apply a then b.
SemilinearMap compose(const Field& F, const SemilinearMap& a, const SemilinearMap& b);
SemilinearMap inverse(const Field& F, const SemilinearMap& a);
Vec apply(const Field& F, const SemilinearMap& g, const Vec& v);
/// Image of a projective point, normalized.
Vec apply_point(const Field& F, const SemilinearMap& g, const Vec& v);
Subspace apply(const SemilinearMap& g, const Subspace& s);

/// Scales the matrix so its first nonzero entry is one; equal keys mean equal
/// projective action.
SemilinearMap projective_normalize(const Field& F, const SemilinearMap& g);
std::string projective_key(const Field& F, const SemilinearMap& g);
bool is_projective_identity(const Field& F, const SemilinearMap& g);

/// B(x^g, y^g) = c B(x, y)^(p^k) (and phi(x^g) = c phi(x)^(p^k) for quadratic forms).
/// Returns c, or nothing when g is not a similarity of the form.
std::optional<Fe> similarity_scalar(const Form& form, const SemilinearMap& g);
/// Exact isometry: linear with c = 1.
bool preserves_exactly(const Form& form, const SemilinearMap& g);

/// Same map over the prime field: GF(p^e)^n is identified with GF(p)^(ne),
/// coordinate i contributing the block of its residue coefficients c_0..c_{e-1}.
Matrix realize_over_prime(const Field& F, const SemilinearMap& g, const Field& prime);
/// Prime-field coordinates of a GF(p^e) vector, in the same layout.
Vec restrict_scalars(const Field& F, const Vec& v, const Field& prime);

/// Dickson invariant (characteristic 2): parity of rank(g - 1).
int dickson_invariant(const Field& F, const Matrix& g);

}  // namespace geomforge
