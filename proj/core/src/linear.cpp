#include "geomforge/linear.hpp"

#include <algorithm>
#include <sstream>

namespace geomforge {

Vec::Vec(int n) : n_(n) {
  if (n < 0 || n > kMaxDim) throw DimensionError("vector length out of range");
}

Vec::Vec(std::initializer_list<int> indices) : Vec(static_cast<int>(indices.size())) {
  int i = 0;
  for (int x : indices) c_[i++] = Fe{static_cast<std::uint8_t>(x)};
}

bool Vec::is_zero() const { return leading() < 0; }

int Vec::leading() const {
  for (int i = 0; i < n_; ++i) {
    if (c_[i].value != 0) return i;
  }
  return -1;
}

bool operator==(const Vec& a, const Vec& b) {
  if (a.n_ != b.n_) return false;
  for (int i = 0; i < a.n_; ++i) {
    if (a.c_[i] != b.c_[i]) return false;
  }
  return true;
}

bool operator<(const Vec& a, const Vec& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (int i = 0; i < a.n_; ++i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

namespace {

void check_same(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
}

}  // namespace

Vec add(const Field& F, const Vec& a, const Vec& b) {
  check_same(a, b);
  Vec r(a.size());
  for (int i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vec sub(const Field& F, const Vec& a, const Vec& b) {
  check_same(a, b);
  Vec r(a.size());
  for (int i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

Vec scale(const Field& F, Fe s, const Vec& a) {
  Vec r(a.size());
  for (int i = 0; i < a.size(); ++i) r[i] = F.mul(s, a[i]);
  return r;
}

Vec axpy(const Field& F, const Vec& a, Fe s, const Vec& b) {
  check_same(a, b);
  Vec r(a.size());
  for (int i = 0; i < a.size(); ++i) r[i] = F.add(a[i], F.mul(s, b[i]));
  return r;
}

Fe dot(const Field& F, const Vec& a, const Vec& b) {
  check_same(a, b);
  Fe s = F.zero();
  for (int i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
  return s;
}

Vec frobenius(const Field& F, const Vec& a, int k) {
  if (k % F.e() == 0) return a;
  Vec r(a.size());
  for (int i = 0; i < a.size(); ++i) r[i] = F.frobenius(a[i], k);
  return r;
}

Vec mul(const Field& F, const Vec& v, const Matrix& m) {
  if (static_cast<int>(m.size()) != v.size()) throw DimensionError("vector/matrix mismatch");
  const int cols = m.empty() ? 0 : m[0].size();
  Vec r(cols);
  for (int i = 0; i < v.size(); ++i) {
    const Fe s = v[i];
    if (s.value == 0) continue;
    const Vec& row = m[i];
    for (int j = 0; j < cols; ++j) r[j] = F.add(r[j], F.mul(s, row[j]));
  }
  return r;
}

Matrix mul(const Field& F, const Matrix& a, const Matrix& b) {
  Matrix r;
  r.reserve(a.size());
  for (const Vec& row : a) r.push_back(mul(F, row, b));
  return r;
}

Matrix identity(const Field& F, int n) {
  Matrix m(n, Vec(n));
  for (int i = 0; i < n; ++i) m[i][i] = F.one();
  return m;
}

Matrix transpose(const Matrix& a, int cols) {
  Matrix t(cols, Vec(static_cast<int>(a.size())));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int j = 0; j < cols; ++j) t[j][static_cast<int>(i)] = a[i][j];
  }
  return t;
}

Matrix inverse(const Field& F, const Matrix& a) {
  const int n = static_cast<int>(a.size());
  Matrix m = a;
  Matrix inv = identity(F, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (m[r][col].value != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw DimensionError("matrix is singular");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Fe s = F.inv(m[col][col]);
    m[col] = scale(F, s, m[col]);
    inv[col] = scale(F, s, inv[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].value == 0) continue;
      const Fe f = F.neg(m[r][col]);
      m[r] = axpy(F, m[r], f, m[col]);
      inv[r] = axpy(F, inv[r], f, inv[col]);
    }
  }
  return inv;
}

Matrix frobenius(const Field& F, const Matrix& m, int k) {
  if (k % F.e() == 0) return m;
  Matrix r;
  r.reserve(m.size());
  for (const Vec& row : m) r.push_back(frobenius(F, row, k));
  return r;
}

int rank(const Field& F, Matrix rows) {
  if (rows.empty()) return 0;
  return rref(F, rows[0].size(), rows).dim();
}

Vec normalize(const Field& F, const Vec& v) {
  const int l = v.leading();
  if (l < 0 || v[l] == F.one()) return v;
  return scale(F, F.inv(v[l]), v);
}

std::uint64_t vec_key(const Field& F, const Vec& v) {
  const std::uint64_t q = static_cast<std::uint64_t>(F.order());
  std::uint64_t key = 0;
  for (int i = 0; i < v.size(); ++i) key = key * q + v[i].value;
  return key;
}

Vec vec_from_key(const Field& F, int n, std::uint64_t key) {
  const std::uint64_t q = static_cast<std::uint64_t>(F.order());
  Vec v(n);
  for (int i = n - 1; i >= 0; --i) {
    v[i] = Fe{static_cast<std::uint8_t>(key % q)};
    key /= q;
  }
  return v;
}

Subspace::Subspace(Field field, int ambient_dim) : field_(std::move(field)), n_(ambient_dim) {
  if (ambient_dim < 0 || ambient_dim > kMaxDim) throw DimensionError("ambient dimension out of range");
}

Subspace Subspace::span(Field field, int ambient_dim, const Matrix& rows) {
  return rref(field, ambient_dim, rows);
}

Subspace Subspace::full(Field field, int ambient_dim) {
  Matrix id = identity(field, ambient_dim);
  Subspace s(std::move(field), ambient_dim);
  s.basis_ = std::move(id);
  s.pivots_.resize(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) s.pivots_[i] = i;
  return s;
}

Subspace Subspace::point(const Field& field, const Vec& v) {
  return rref(field, v.size(), Matrix{v});
}

Subspace rref(const Field& F, int ambient_dim, const Matrix& rows) {
  Matrix m;
  m.reserve(rows.size());
  for (const Vec& r : rows) {
    if (r.size() != ambient_dim) throw DimensionError("row length differs from ambient dimension");
    if (!r.is_zero()) m.push_back(r);
  }
  std::vector<int> pivots;
  int row = 0;
  const int nrows = static_cast<int>(m.size());
  for (int col = 0; col < ambient_dim && row < nrows; ++col) {
    int piv = -1;
    for (int r = row; r < nrows; ++r) {
      if (m[r][col].value != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    m[row] = scale(F, F.inv(m[row][col]), m[row]);
    for (int r = 0; r < nrows; ++r) {
      if (r == row || m[r][col].value == 0) continue;
      m[r] = axpy(F, m[r], F.neg(m[r][col]), m[row]);
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  Subspace out(F, ambient_dim);
  out.basis_ = std::move(m);
  out.pivots_ = std::move(pivots);
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != n_) throw DimensionError("ambient mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Fe c = r[pivots_[i]];
    if (c.value != 0) r = axpy(field_, r, field_.neg(c), basis_[i]);
  }
  return r.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_) throw DimensionError("ambient mismatch");
  for (const Vec& b : other.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

std::uint64_t Subspace::point_count() const {
  std::uint64_t qk = 1;
  for (int i = 0; i < dim(); ++i) qk *= static_cast<std::uint64_t>(field_.order());
  return (qk - 1) / static_cast<std::uint64_t>(field_.order() - 1);
}

std::string Subspace::key() const {
  std::string k;
  k.reserve(2 + basis_.size() * n_);
  k.push_back(static_cast<char>(n_));
  k.push_back(static_cast<char>(basis_.size()));
  for (const Vec& b : basis_) {
    for (int i = 0; i < n_; ++i) k.push_back(static_cast<char>(b[i].value));
  }
  return k;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.basis_ < b.basis_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient mismatch");
  Matrix rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return rref(a.field(), a.ambient_dim(), rows);
}

Subspace null_space(const Field& F, int n, const Matrix& rows) {
  const Subspace r = rref(F, n, rows);
  std::vector<bool> is_pivot(n, false);
  for (int p : r.pivots()) is_pivot[p] = true;
  Matrix out;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = F.one();
    for (int i = 0; i < r.dim(); ++i) v[r.pivots()[i]] = F.neg(r.basis()[i][free]);
    out.push_back(v);
  }
  return rref(F, n, out);
}

Subspace annihilator(const Subspace& s) { return null_space(s.field(), s.ambient_dim(), s.basis()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient mismatch");
  return annihilator(sum(annihilator(a), annihilator(b)));
}

void for_each_point(const Subspace& s, const std::function<void(const Vec&)>& fn) {
  const Field& F = s.field();
  const int k = s.dim();
  const int q = F.order();
  // Coefficient vectors whose first nonzero entry is one; with RREF rows the
  // combination is then already normalized.
  for (int lead = 0; lead < k; ++lead) {
    const int free = k - lead - 1;
    std::uint64_t count = 1;
    for (int i = 0; i < free; ++i) count *= static_cast<std::uint64_t>(q);
    for (std::uint64_t code = 0; code < count; ++code) {
      Vec v = s.basis()[lead];
      std::uint64_t c = code;
      for (int j = lead + 1; j < k; ++j) {
        const Fe a{static_cast<std::uint8_t>(c % q)};
        c /= q;
        if (a.value != 0) v = axpy(F, v, a, s.basis()[j]);
      }
      fn(v);
    }
  }
}

std::vector<Vec> enumerate_points(const Subspace& s) {
  std::vector<Vec> pts;
  pts.reserve(s.point_count());
  for_each_point(s, [&](const Vec& v) { pts.push_back(v); });
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<Subspace> enumerate_subspaces(const Field& F, int n, int k) {
  if (k < 0 || k > n) throw DimensionError("subspace dimension out of range");
  std::vector<Subspace> out;
  const int q = F.order();
  std::vector<int> piv(k);
  // Iterate over pivot sets, then over the free entries of the RREF.
  std::function<void(int, int)> choose = [&](int idx, int start) {
    if (idx == k) {
      std::vector<std::pair<int, int>> free;  // (row, col)
      for (int r = 0; r < k; ++r) {
        for (int c = piv[r] + 1; c < n; ++c) {
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
        }
      }
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < free.size(); ++i) count *= static_cast<std::uint64_t>(q);
      for (std::uint64_t code = 0; code < count; ++code) {
        Matrix m(k, Vec(n));
        for (int r = 0; r < k; ++r) m[r][piv[r]] = F.one();
        std::uint64_t c = code;
        for (const auto& [r, col] : free) {
          m[r][col] = Fe{static_cast<std::uint8_t>(c % q)};
          c /= q;
        }
        out.push_back(rref(F, n, m));
      }
      return;
    }
    for (int c = start; c <= n - (k - idx); ++c) {
      piv[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> hyperplanes(const Field& F, int n) {
  std::vector<Subspace> out;
  const Subspace full = Subspace::full(F, n);
  for (const Vec& a : enumerate_points(full)) {
    out.push_back(null_space(F, n, Matrix{a}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Antiflag> antiflags(const Field& F, int n) {
  if (n < 2) throw DimensionError("antiflags need n >= 2");
  const std::vector<Vec> pts = enumerate_points(Subspace::full(F, n));
  const std::vector<Subspace> hyp = hyperplanes(F, n);
  std::vector<Antiflag> out;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    for (int h = 0; h < static_cast<int>(hyp.size()); ++h) {
      if (!hyp[h].contains(pts[i])) out.push_back({i, h});
    }
  }
  return out;
}

PointSet::PointSet(Field field, int n, std::vector<Vec> points)
    : field_(std::make_shared<const Field>(std::move(field))), n_(n), points_(std::move(points)) {
  index_.reserve(points_.size() * 2);
  for (int i = 0; i < static_cast<int>(points_.size()); ++i) {
    points_[i] = normalize(*field_, points_[i]);
    index_.emplace(vec_key(*field_, points_[i]), i);
  }
}

PointSet PointSet::projective_space(const Field& F, int n) {
  return PointSet(F, n, enumerate_points(Subspace::full(F, n)));
}

int PointSet::find(const Vec& v) const {
  if (v.is_zero()) return -1;
  const auto it = index_.find(vec_key(*field_, normalize(*field_, v)));
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> PointSet::ids_in(const Subspace& s) const {
  std::vector<int> ids;
  for_each_point(s, [&](const Vec& v) {
    const int id = find(v);
    if (id >= 0) ids.push_back(id);
  });
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << static_cast<int>(v[i].value);
  }
  os << ')';
  return os.str();
}

}  // namespace geomforge
