#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "geomforge/field.hpp"

namespace geomforge {

inline constexpr int kMaxDim = 16;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Row vector of length n <= kMaxDim. Stored inline; cheap to copy.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int n);
  Vec(std::initializer_list<int> indices);

  int size() const { return n_; }
  Fe operator[](int i) const { return c_[i]; }
  Fe& operator[](int i) { return c_[i]; }
  std::span<const Fe> coords() const { return {c_.data(), static_cast<std::size_t>(n_)}; }

  bool is_zero() const;
  /// Index of the first nonzero coordinate, or -1.
  int leading() const;

  friend bool operator==(const Vec& a, const Vec& b);
  friend bool operator<(const Vec& a, const Vec& b);

 private:
  std::array<Fe, kMaxDim> c_{};
  int n_ = 0;
};

/// Rows of a (not necessarily square) matrix.
using Matrix = std::vector<Vec>;

Vec add(const Field& F, const Vec& a, const Vec& b);
Vec sub(const Field& F, const Vec& a, const Vec& b);
Vec scale(const Field& F, Fe s, const Vec& a);
/// a + s*b
Vec axpy(const Field& F, const Vec& a, Fe s, const Vec& b);
Fe dot(const Field& F, const Vec& a, const Vec& b);
Vec frobenius(const Field& F, const Vec& a, int k);
/// Row vector times matrix.
Vec mul(const Field& F, const Vec& v, const Matrix& m);
Matrix mul(const Field& F, const Matrix& a, const Matrix& b);
Matrix identity(const Field& F, int n);
Matrix transpose(const Matrix& a, int cols);
/// Throws DimensionError if singular.
Matrix inverse(const Field& F, const Matrix& a);
int rank(const Field& F, Matrix rows);
Matrix frobenius(const Field& F, const Matrix& m, int k);

/// First nonzero coordinate scaled to one. Zero stays zero.
Vec normalize(const Field& F, const Vec& v);

/// Integer key sum(c_i * q^(n-1-i)); monotone in lexicographic coordinate order.
std::uint64_t vec_key(const Field& F, const Vec& v);
Vec vec_from_key(const Field& F, int n, std::uint64_t key);

/// Subspace of GF(q)^n held by its reduced row echelon basis. Equal subspaces
/// have identical bases, so equality and hashing are structural.
class Subspace {
 public:
  Subspace(Field field, int ambient_dim);  // zero subspace
  static Subspace span(Field field, int ambient_dim, const Matrix& rows);
  static Subspace full(Field field, int ambient_dim);
  static Subspace point(const Field& field, const Vec& v);

  const Field& field() const { return field_; }
  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Number of projective points, (q^k - 1)/(q - 1).
  std::uint64_t point_count() const;

  std::string key() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b);
  friend Subspace rref(const Field& F, int ambient_dim, const Matrix& rows);

 private:
  Field field_;
  int n_ = 0;
  Matrix basis_;
  std::vector<int> pivots_;
};

/// RREF of the span of the given rows.
Subspace rref(const Field& F, int ambient_dim, const Matrix& rows);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Annihilator under the standard dot product.
Subspace annihilator(const Subspace& s);
/// Null space of the rows: {v : row . v = 0 for every row}.
Subspace null_space(const Field& F, int ambient_dim, const Matrix& rows);

/// Normalized points of the subspace in canonical (lexicographic) order.
std::vector<Vec> enumerate_points(const Subspace& s);
/// Calls fn for every normalized point of the subspace, unordered.
void for_each_point(const Subspace& s, const std::function<void(const Vec&)>& fn);
/// All k-dimensional subspaces of GF(q)^n in canonical order.
std::vector<Subspace> enumerate_subspaces(const Field& F, int n, int k);
std::vector<Subspace> hyperplanes(const Field& F, int n);

struct Antiflag {
  int point;
  int hyperplane;
};
/// Pairs (point id, hyperplane id) with the point off the hyperplane; ids index
/// enumerate_points(full space) and hyperplanes(F, n).
std::vector<Antiflag> antiflags(const Field& F, int n);

/// Canonical list of projective points with a key -> id lookup.
class PointSet {
 public:
  PointSet() = default;
  PointSet(Field field, int n, std::vector<Vec> points);
  static PointSet projective_space(const Field& F, int n);

  const Field& field() const { return *field_; }
  int ambient_dim() const { return n_; }
  int size() const { return static_cast<int>(points_.size()); }
  const Vec& operator[](int i) const { return points_[i]; }
  const std::vector<Vec>& points() const { return points_; }
  /// Id of the projective point spanned by v, or -1.
  int find(const Vec& v) const;
  /// Ids of points lying in s, ascending.
  std::vector<int> ids_in(const Subspace& s) const;

 private:
  std::shared_ptr<const Field> field_;
  int n_ = 0;
  std::vector<Vec> points_;
  std::unordered_map<std::uint64_t, int> index_;
};

std::string to_string(const Vec& v);

}  // namespace geomforge

template <>
struct std::hash<geomforge::Subspace> {
  std::size_t operator()(const geomforge::Subspace& s) const noexcept {
    return std::hash<std::string>{}(s.key());
  }
};
