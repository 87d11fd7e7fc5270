#include "geomforge/polar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_set>

namespace geomforge {

namespace {

std::uint64_t ipow(std::uint64_t b, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

int isqrt_exact(int q) {
  for (int r = 1; r * r <= q; ++r) {
    if (r * r == q) return r;
  }
  return -1;
}

}  // namespace

std::string to_string(PolarType t) {
  switch (t) {
    case PolarType::Symplectic: return "Sp";
    case PolarType::OrthogonalPlus: return "O+";
    case PolarType::OrthogonalOdd: return "O";
    case PolarType::OrthogonalMinus: return "O-";
    case PolarType::Unitary: return "U";
  }
  return "?";
}

PolarType parse_polar_type(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "sp" || t == "symplectic") return PolarType::Symplectic;
  if (t == "o+" || t == "oplus" || t == "plus") return PolarType::OrthogonalPlus;
  if (t == "o-" || t == "ominus" || t == "minus") return PolarType::OrthogonalMinus;
  if (t == "o" || t == "oodd" || t == "parabolic") return PolarType::OrthogonalOdd;
  if (t == "u" || t == "unitary" || t == "hermitian") return PolarType::Unitary;
  throw PolarError("unknown polar type: " + s);
}

Form Form::symplectic(Field F, Matrix gram) {
  const int n = static_cast<int>(gram.size());
  for (int i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw PolarError("gram matrix is not square");
    if (gram[i][i].value != 0) throw PolarError("symplectic gram matrix is not alternating");
    for (int j = 0; j < n; ++j) {
      if (gram[i][j] != F.neg(gram[j][i])) throw PolarError("symplectic gram matrix is not alternating");
    }
  }
  Form f(FormKind::Symplectic, std::move(F), n);
  f.gram_ = std::move(gram);
  return f;
}

Form Form::quadratic(Field F, Matrix upper) {
  const int n = static_cast<int>(upper.size());
  for (int i = 0; i < n; ++i) {
    if (upper[i].size() != n) throw PolarError("coefficient table is not square");
    for (int j = 0; j < i; ++j) {
      if (upper[i][j].value != 0) throw PolarError("quadratic coefficients must be upper triangular");
    }
  }
  Form f(FormKind::Quadratic, F, n);
  f.gram_.assign(n, Vec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        f.gram_[i][i] = F.add(upper[i][i], upper[i][i]);
      } else {
        f.gram_[i][j] = i < j ? upper[i][j] : upper[j][i];
      }
    }
  }
  f.quad_ = std::move(upper);
  return f;
}

Form Form::hermitian(Field F, Matrix gram, int q0) {
  const int n = static_cast<int>(gram.size());
  if (q0 * q0 != F.order()) throw PolarError("hermitian form needs a field of order q0^2");
  int k = 0;
  {
    int pk = 1;
    while (pk < q0) {
      pk *= F.p();
      ++k;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (gram[i][j] != F.frobenius(gram[j][i], k)) throw PolarError("gram matrix is not hermitian");
    }
  }
  Form f(FormKind::Hermitian, std::move(F), n);
  f.gram_ = std::move(gram);
  f.q0_ = q0;
  f.conj_power_ = k;
  return f;
}

Fe Form::bilinear(const Vec& x, const Vec& y) const {
  const Vec xg = mul(field_, x, gram_);
  return dot(field_, xg, conj_power_ ? frobenius(field_, y, conj_power_) : y);
}

Fe Form::quadratic(const Vec& x) const {
  if (kind_ != FormKind::Quadratic) throw PolarError("not a quadratic form");
  Fe s = field_.zero();
  for (int i = 0; i < n_; ++i) {
    if (x[i].value == 0) continue;
    const Vec& row = quad_[i];
    Fe t = field_.zero();
    for (int j = i; j < n_; ++j) t = field_.add(t, field_.mul(row[j], x[j]));
    s = field_.add(s, field_.mul(x[i], t));
  }
  return s;
}

bool Form::is_isotropic(const Vec& x) const {
  switch (kind_) {
    case FormKind::Symplectic: return true;
    case FormKind::Quadratic: return quadratic(x).value == 0;
    case FormKind::Hermitian: return bilinear(x, x).value == 0;
  }
  return false;
}

Matrix Form::perp_rows(const Matrix& vectors) const {
  Matrix rows;
  rows.reserve(vectors.size());
  for (const Vec& s : vectors) {
    Vec r = mul(field_, s, gram_);
    if (conj_power_) r = frobenius(field_, r, conj_power_);
    rows.push_back(r);
  }
  return rows;
}

Subspace Form::radical() const { return null_space(field_, n_, perp_rows(identity(field_, n_))); }

Fe minus_type_alpha(const Field& F) {
  for (Fe a : F.elements()) {
    bool has_root = false;
    for (Fe t : F.elements()) {
      if (F.add(F.add(F.mul(t, t), t), a).value == 0) {
        has_root = true;
        break;
      }
    }
    if (!has_root) return a;
  }
  throw PolarError("no irreducible t^2 + t + alpha");
}

Form standard_form(PolarType type, int n, int q) {
  if (n < 1 || n > kMaxDim) throw PolarError("dimension out of range");
  switch (type) {
    case PolarType::Symplectic: {
      if (n % 2) throw PolarError("symplectic spaces need even dimension");
      const Field F = Field::of_order(q);
      Matrix g(n, Vec(n));
      for (int i = 0; i + 1 < n; i += 2) {
        g[i][i + 1] = F.one();
        g[i + 1][i] = F.neg(F.one());
      }
      return Form::symplectic(F, std::move(g));
    }
    case PolarType::OrthogonalPlus:
    case PolarType::OrthogonalMinus: {
      if (n % 2 || n < 2) throw PolarError("O+/O- spaces need even dimension");
      const Field F = Field::of_order(q);
      Matrix u(n, Vec(n));
      const int hyperbolic = type == PolarType::OrthogonalPlus ? n : n - 2;
      for (int i = 0; i + 1 < hyperbolic; i += 2) u[i][i + 1] = F.one();
      if (type == PolarType::OrthogonalMinus) {
        const int a = n - 2;
        const int b = n - 1;
        u[a][a] = F.one();
        u[a][b] = F.one();
        u[b][b] = minus_type_alpha(F);
      }
      return Form::quadratic(F, std::move(u));
    }
    case PolarType::OrthogonalOdd: {
      if (n % 2 == 0) throw PolarError("parabolic spaces need odd dimension");
      const Field F = Field::of_order(q);
      Matrix u(n, Vec(n));
      u[0][0] = F.one();
      for (int i = 1; i + 1 < n; i += 2) u[i][i + 1] = F.one();
      return Form::quadratic(F, std::move(u));
    }
    case PolarType::Unitary: {
      const Field F = Field::of_order(q * q);
      return Form::hermitian(F, identity(F, n), q);
    }
  }
  throw PolarError("unknown polar type");
}

int type_constant_twice(PolarType type, int n) {
  switch (type) {
    case PolarType::Symplectic: return 0;
    case PolarType::OrthogonalPlus: return -2;
    case PolarType::OrthogonalOdd: return 0;
    case PolarType::OrthogonalMinus: return 2;
    case PolarType::Unitary: return n % 2 == 0 ? -1 : 1;
  }
  return 0;
}

int expected_rank(PolarType type, int n) {
  switch (type) {
    case PolarType::Symplectic:
    case PolarType::OrthogonalPlus: return n / 2;
    case PolarType::OrthogonalOdd: return (n - 1) / 2;
    case PolarType::OrthogonalMinus: return n / 2 - 1;
    case PolarType::Unitary: return n / 2;
  }
  return 0;
}

std::uint64_t expected_point_count(PolarType type, int n, int q) {
  const std::uint64_t Q = static_cast<std::uint64_t>(q);
  switch (type) {
    case PolarType::Symplectic:
    case PolarType::OrthogonalOdd: return (ipow(Q, n - 1 + (type == PolarType::Symplectic)) - 1) / (Q - 1);
    case PolarType::OrthogonalPlus: {
      const int r = n / 2;
      return (ipow(Q, r - 1) + 1) * (ipow(Q, r) - 1) / (Q - 1);
    }
    case PolarType::OrthogonalMinus: {
      const int r = n / 2 - 1;
      return (ipow(Q, r + 1) + 1) * (ipow(Q, r) - 1) / (Q - 1);
    }
    case PolarType::Unitary: {
      // (q0^n - (-1)^n)(q0^(n-1) - (-1)^(n-1)) / (q0^2 - 1), signed arithmetic.
      const long long a = static_cast<long long>(ipow(Q, n)) - (n % 2 ? -1 : 1);
      const long long b = static_cast<long long>(ipow(Q, n - 1)) - ((n - 1) % 2 ? -1 : 1);
      return static_cast<std::uint64_t>(a * b / static_cast<long long>(Q * Q - 1));
    }
  }
  return 0;
}

PolarSpace::PolarSpace(PolarType type, Form form, int q)
    : type_(type), form_(std::move(form)), q_(q), witness_(form_.field(), form_.dim()) {
  const Field& F = form_.field();
  const int n = form_.dim();
  std::vector<Vec> pts;
  for_each_point(Subspace::full(F, n), [&](const Vec& v) {
    if (form_.is_isotropic(v)) pts.push_back(v);
  });
  std::sort(pts.begin(), pts.end());
  points_ = PointSet(F, n, std::move(pts));

  witness_ = extend_to_maximal(Subspace(F, n));
  rank_ = witness_.dim();
  c2_ = geomforge::type_constant_twice(type_, n);

  if (rank_ != expected_rank(type_, n)) {
    throw PolarError("form does not match type " + to_string(type_) + ": rank " + std::to_string(rank_));
  }
  const std::uint64_t expected = expected_point_count(type_, n, q_);
  if (static_cast<std::uint64_t>(points_.size()) != expected) {
    throw PolarError("form does not match type " + to_string(type_) + ": " +
                     std::to_string(points_.size()) + " points, expected " + std::to_string(expected));
  }
}

PolarSpace PolarSpace::standard(PolarType type, int n, int q) {
  return PolarSpace(type, standard_form(type, n, q), q);
}

PolarSpace PolarSpace::from_form(PolarType type, Form form) {
  int q = form.field().order();
  if (type == PolarType::Unitary) q = isqrt_exact(q);
  const bool kind_ok = (type == PolarType::Symplectic && form.kind() == FormKind::Symplectic) ||
                       (type == PolarType::Unitary && form.kind() == FormKind::Hermitian) ||
                       (type != PolarType::Symplectic && type != PolarType::Unitary &&
                        form.kind() == FormKind::Quadratic);
  if (!kind_ok) throw PolarError("form kind does not match polar type " + to_string(type));
  return PolarSpace(type, std::move(form), q);
}

Subspace PolarSpace::perp(const Subspace& s) const {
  if (s.ambient_dim() != ambient_dim()) throw DimensionError("ambient mismatch");
  return null_space(field(), ambient_dim(), form_.perp_rows(s.basis()));
}

bool PolarSpace::perpendicular(const Vec& x, const Vec& y) const {
  return form_.bilinear(x, y).value == 0;
}

bool PolarSpace::is_singular(const Subspace& s) const {
  const Matrix& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!form_.is_isotropic(b[i])) return false;
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (form_.bilinear(b[i], b[j]).value != 0) return false;
    }
  }
  return true;
}

Subspace PolarSpace::extend_to_maximal(const Subspace& s) const {
  if (!is_singular(s)) throw PolarError("subspace is not totally singular");
  Subspace w = s;
  Matrix rows = form_.perp_rows(w.basis());
  for (int id = 0; id < points_.size(); ++id) {
    const Vec& x = points_[id];
    bool perp_all = true;
    for (const Vec& r : rows) {
      if (dot(field(), r, x).value != 0) {
        perp_all = false;
        break;
      }
    }
    if (!perp_all || w.contains(x)) continue;
    w = sum(w, Subspace::point(field(), x));
    rows = form_.perp_rows(w.basis());
  }
  return w;
}

std::vector<Subspace> PolarSpace::totally_singular(int k) const {
  if (k < 0 || k > rank_) return {};
  std::vector<Subspace> level{Subspace(field(), ambient_dim())};
  for (int d = 1; d <= k; ++d) {
    std::unordered_set<Subspace> next;
    for (const Subspace& s : level) {
      const Matrix rows = form_.perp_rows(s.basis());
      for (const Vec& x : points_.points()) {
        bool ok = true;
        for (const Vec& r : rows) {
          if (dot(field(), r, x).value != 0) {
            ok = false;
            break;
          }
        }
        if (!ok || s.contains(x)) continue;
        next.insert(sum(s, Subspace::point(field(), x)));
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
  return level;
}

std::uint64_t PolarSpace::expected_9_2(int i) const {
  if (type_ == PolarType::Unitary) {
    return ipow(static_cast<std::uint64_t>(q_), 2 * (2 * rank_ - i) + c2_);
  }
  return ipow(static_cast<std::uint64_t>(q_), 2 * rank_ - i + c2_ / 2);
}

SolidFamilies solid_families(const PolarSpace& P) {
  if (P.type() != PolarType::OrthogonalPlus) throw PolarError("solid families need an O+ space");
  const int r = P.rank();
  const std::vector<Subspace> solids = P.max_ts_subspaces();
  if (solids.empty()) throw PolarError("no maximal t.s. subspaces");
  auto meet_dim = [&](const Subspace& a, const Subspace& b) { return 2 * r - sum(a, b).dim(); };

  SolidFamilies fam;
  std::vector<int> label(solids.size());
  for (std::size_t i = 0; i < solids.size(); ++i) {
    const bool same = (meet_dim(solids[0], solids[i]) - r) % 2 == 0;
    label[i] = same ? 0 : 1;
    (same ? fam.family_a : fam.family_b).push_back(solids[i]);
  }
  if (fam.family_a.size() != fam.family_b.size()) throw PolarError("solid families have unequal sizes");
  // Parity relation must be an equivalence with exactly these two classes.
  for (std::size_t i = 0; i < solids.size(); ++i) {
    for (std::size_t j = i + 1; j < solids.size(); ++j) {
      const bool same = (meet_dim(solids[i], solids[j]) - r) % 2 == 0;
      if (same != (label[i] == label[j])) throw PolarError("intersection parity is not an equivalence");
    }
  }
  for (const Subspace& t : P.totally_singular(r - 1)) {
    int in_a = 0;
    int in_b = 0;
    for (const Subspace& s : fam.family_a) in_a += s.contains(t);
    for (const Subspace& s : fam.family_b) in_b += s.contains(t);
    if (in_a != 1 || in_b != 1) throw PolarError("a t.s. (r-1)-space is not in one solid of each family");
  }
  return fam;
}

namespace {

// Ordered greedy t.s. basis through a given starting point.
std::vector<Vec> greedy_chain(const PolarSpace& P, int start_id) {
  const Field& F = P.field();
  std::vector<Vec> chain{P.points()[start_id]};
  Subspace w = Subspace::point(F, chain[0]);
  while (static_cast<int>(chain.size()) < P.rank()) {
    const Matrix rows = P.form().perp_rows(w.basis());
    bool grown = false;
    for (const Vec& x : P.points().points()) {
      bool ok = true;
      for (const Vec& r : rows) {
        if (dot(F, r, x).value != 0) {
          ok = false;
          break;
        }
      }
      if (!ok || w.contains(x)) continue;
      chain.push_back(x);
      w = sum(w, Subspace::point(F, x));
      grown = true;
      break;
    }
    if (!grown) break;
  }
  return chain;
}

}  // namespace

Verify92Result verify_9_2(const PolarSpace& P, int i, int max_chains) {
  if (i < 1 || i > P.rank()) throw PolarError("chain index out of range");
  const Field& F = P.field();
  const int n = P.ambient_dim();
  Verify92Result res;
  res.i = i;
  res.expected = P.expected_9_2(i);
  const int npts = P.points().size();
  std::set<int> starts;
  for (int j = 0; j < std::max(1, max_chains); ++j) {
    starts.insert(static_cast<int>(static_cast<long long>(j) * npts / std::max(1, max_chains)));
  }
  for (int start : starts) {
    const std::vector<Vec> chain = greedy_chain(P, start);
    if (static_cast<int>(chain.size()) < i) continue;
    const Matrix t_basis(chain.begin(), chain.begin() + (i - 1));
    const Matrix t_rows = P.form().perp_rows(t_basis);
    const Vec w_row = P.form().perp_rows(Matrix{chain[i - 1]})[0];
    std::uint64_t count = 0;
    for (const Vec& x : P.points().points()) {
      bool in_t_perp = true;
      for (const Vec& r : t_rows) {
        if (dot(F, r, x).value != 0) {
          in_t_perp = false;
          break;
        }
      }
      if (in_t_perp && dot(F, w_row, x).value != 0) ++count;
    }
    if (res.chains_tested == 0) res.first_count = count;
    ++res.chains_tested;
    if (count != res.expected && res.passed) {
      res.passed = false;
      const Matrix w_basis(chain.begin(), chain.begin() + i);
      res.counterexample = std::make_pair(rref(F, n, t_basis), rref(F, n, w_basis));
      res.counterexample_count = count;
    }
  }
  if (res.chains_tested == 0) res.passed = false;
  return res;
}

Vec drop_coordinate(const Vec& v, int coordinate) {
  Vec r(v.size() - 1);
  for (int i = 0, j = 0; i < v.size(); ++i) {
    if (i != coordinate) r[j++] = v[i];
  }
  return r;
}

SpOBijection sp_o_bijection(const PolarSpace& orth) {
  const Field& F = orth.field();
  if (F.p() != 2) throw PolarError("the Sp/O correspondence needs even q");
  if (orth.type() != PolarType::OrthogonalOdd) throw PolarError("expected an odd-dimensional orthogonal space");
  const Subspace rad = orth.form().radical();
  if (rad.dim() != 1) throw PolarError("polar form radical is not one-dimensional");
  const Vec r = rad.basis()[0];
  const int c = r.leading();
  const int n = orth.ambient_dim();

  auto project = [&](const Vec& x) {
    return drop_coordinate(x[c].value ? axpy(F, x, F.neg(x[c]), r) : x, c);
  };

  Matrix g;
  for (int i = 0; i < n; ++i) {
    if (i == c) continue;
    g.push_back(drop_coordinate(orth.form().gram()[i], c));
  }
  PolarSpace sp = PolarSpace::from_form(PolarType::Symplectic, Form::symplectic(F, std::move(g)));

  SpOBijection out{orth, sp, c, {}, 0, 0, false, false};
  const PointSet& op = orth.points();
  out.point_map.resize(op.size());
  std::vector<int> hit(sp.points().size(), 0);
  bool injective = true;
  for (int i = 0; i < op.size(); ++i) {
    const int j = sp.points().find(project(op[i]));
    out.point_map[i] = j;
    if (j < 0 || hit[j]++) injective = false;
  }
  out.bijective = injective && op.size() == sp.points().size();

  const std::vector<Subspace> olines = orth.totally_singular(2);
  const std::vector<Subspace> slines = sp.totally_singular(2);
  out.orthogonal_lines = static_cast<int>(olines.size());
  out.symplectic_lines = static_cast<int>(slines.size());
  std::set<Subspace> images;
  bool all_ti = true;
  for (const Subspace& L : olines) {
    Matrix rows;
    for (const Vec& b : L.basis()) rows.push_back(project(b));
    Subspace img = rref(F, n - 1, rows);
    if (img.dim() != 2 || !sp.is_singular(img)) all_ti = false;
    images.insert(std::move(img));
  }
  const std::set<Subspace> target(slines.begin(), slines.end());
  out.lines_correspond = all_ti && images == target && olines.size() == slines.size();
  return out;
}

SpOBijection sp_o_bijection(int q, int m) {
  if (q % 2) throw PolarError("the Sp/O correspondence needs even q");
  return sp_o_bijection(PolarSpace::standard(PolarType::OrthogonalOdd, 2 * m + 1, q));
}

namespace {

std::vector<int> omega_cap_perp(const PolarSpace& P, const Vec& v) {
  const Vec row = P.form().perp_rows(Matrix{v})[0];
  std::vector<int> ids;
  for (int id = 0; id < P.points().size(); ++id) {
    if (dot(P.field(), row, P.points()[id]).value == 0) ids.push_back(id);
  }
  return ids;
}

std::vector<Vec> nonsingular_points(const PolarSpace& P) {
  std::vector<Vec> out;
  for (const Vec& v : enumerate_points(Subspace::full(P.field(), P.ambient_dim()))) {
    if (!P.form().is_isotropic(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

Theorem103Result theorem_10_3_check(const PolarSpace& P, const std::vector<int>& phi) {
  if (P.type() != PolarType::OrthogonalPlus) throw PolarError("hyperplane-section recovery needs an O+ space");
  if (P.rank() < 3) throw PolarError("hyperplane-section recovery needs rank >= 3");
  const Field& F = P.field();
  const int r = P.rank();
  std::vector<int> sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<char> in_phi(P.points().size(), 0);
  for (int id : sorted) in_phi.at(id) = 1;

  std::uint64_t hyper_count = 1;
  for (int i = 1; i < r - 1; ++i) hyper_count = hyper_count * F.order() + 1;  // (q^(r-1)-1)/(q-1)

  Theorem103Result res;
  for (const Subspace& U : P.max_ts_subspaces()) {
    Matrix in;
    for (int id : P.points().ids_in(U)) {
      if (in_phi[id]) in.push_back(P.points()[id]);
    }
    if (in.size() != hyper_count || rank(F, in) != r - 1) {
      res.status = Theorem103Status::HypothesisViolated;
      res.witness_solid = U;
      return res;
    }
  }
  for (const Vec& v : nonsingular_points(P)) {
    if (omega_cap_perp(P, v) == sorted) {
      res.status = Theorem103Status::Recovered;
      res.v = v;
      return res;
    }
  }
  res.status = Theorem103Status::NoVector;
  return res;
}

GridCount rank2_hypothesis_sets(int q) {
  const PolarSpace P = PolarSpace::standard(PolarType::OrthogonalPlus, 4, q);
  const Field& F = P.field();
  const std::vector<Subspace> lines = P.totally_singular(2);
  std::vector<Subspace> ruling_a;
  std::vector<Subspace> ruling_b;
  for (const Subspace& L : lines) {
    (intersect(L, lines[0]).dim() % 2 == 0 ? ruling_a : ruling_b).push_back(L);
  }
  std::set<std::vector<int>> conics;
  for (const Vec& v : nonsingular_points(P)) conics.insert(omega_cap_perp(P, v));

  GridCount out;
  const int k = static_cast<int>(ruling_a.size());
  std::vector<char> used(ruling_b.size(), 0);
  std::vector<int> chosen;
  auto recurse = [&](auto&& self, int a) -> void {
    if (a == k) {
      std::vector<int> ids = chosen;
      std::sort(ids.begin(), ids.end());
      ++out.hypothesis_sets;
      if (conics.count(ids)) ++out.conics;
      return;
    }
    for (std::size_t b = 0; b < ruling_b.size(); ++b) {
      if (used[b]) continue;
      const Subspace meet = intersect(ruling_a[a], ruling_b[b]);
      if (meet.dim() != 1) continue;
      used[b] = 1;
      chosen.push_back(P.points().find(meet.basis()[0]));
      self(self, a + 1);
      chosen.pop_back();
      used[b] = 0;
    }
  };
  (void)F;
  recurse(recurse, 0);
  return out;
}

}  // namespace geomforge
