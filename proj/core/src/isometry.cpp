#include "geomforge/isometry.hpp"

namespace geomforge {

namespace {

struct Search {
  const Form& form;
  const Field& F;
  int n;
  Matrix basis;
  Matrix basis_inverse;
  const IsometryQuery& query;
  const std::function<bool(const Matrix&)>& visit;
  std::vector<Vec> vectors;         // every nonzero vector of the space
  std::vector<std::vector<Fe>> gram;  // B(b_i, b_j)
  Matrix images;
  std::uint64_t visited = 0;
  bool stopped = false;

  void run(int level, const std::vector<std::vector<int>>& lists) {
    if (stopped) return;
    if (level == n) {
      if (rank(F, images) != n) return;
      ++visited;
      if (!visit(mul(F, basis_inverse, images))) stopped = true;
      return;
    }
    for (int idx : lists[level]) {
      images[level] = vectors[idx];
      if (query.partial && !query.partial(level, Matrix(images.begin(), images.begin() + level + 1))) continue;
      // Forward check: future images must satisfy B(w_level, w_k) = B(b_level, b_k).
      const Vec row = form.perp_rows({vectors[idx]})[0];
      std::vector<std::vector<int>> next(lists);
      bool dead = false;
      for (int k = level + 1; k < n && !dead; ++k) {
        std::vector<int> kept;
        for (int c : lists[k]) {
          if (dot(F, row, vectors[c]) == gram[level][k]) kept.push_back(c);
        }
        dead = kept.empty();
        next[k] = std::move(kept);
      }
      if (!dead) run(level + 1, next);
      if (stopped) return;
    }
  }
};

}  // namespace

std::uint64_t for_each_isometry(const Form& form, const IsometryQuery& query,
                                const std::function<bool(const Matrix& g)>& visit) {
  if (form.kind() == FormKind::Hermitian) throw PolarError("isometry search supports bilinear forms only");
  const Field& F = form.field();
  const int n = form.dim();
  Search s{form, F, n, query.basis.empty() ? identity(F, n) : query.basis, {}, query, visit, {}, {}, Matrix(n, Vec(n)), 0, false};
  if (static_cast<int>(s.basis.size()) != n || rank(F, s.basis) != n) throw DimensionError("isometry search basis is not a basis");
  s.basis_inverse = inverse(F, s.basis);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(F.order());
  if (total > (1ULL << 16)) throw DimensionError("space too large for isometry search");
  for (std::uint64_t key = 1; key < total; ++key) s.vectors.push_back(vec_from_key(F, n, key));
  s.gram.assign(n, std::vector<Fe>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s.gram[i][j] = form.bilinear(s.basis[i], s.basis[j]);
  }
  std::vector<std::vector<int>> lists(n);
  for (int i = 0; i < n; ++i) {
    const bool quad = form.kind() == FormKind::Quadratic;
    const Fe target = quad ? form.quadratic(s.basis[i]) : form.bilinear(s.basis[i], s.basis[i]);
    for (std::size_t c = 0; c < s.vectors.size(); ++c) {
      const Vec& v = s.vectors[c];
      const Fe value = quad ? form.quadratic(v) : form.bilinear(v, v);
      if (value == target) lists[i].push_back(static_cast<int>(c));
    }
  }
  s.run(0, lists);
  return s.visited;
}

}  // namespace geomforge
