#include "geomforge/semilinear.hpp"

namespace geomforge {

SemilinearMap linear_map(Matrix m) { return SemilinearMap{std::move(m), 0}; }

SemilinearMap identity_map(const Field& F, int n) { return SemilinearMap{identity(F, n), 0}; }

SemilinearMap compose(const Field& F, const SemilinearMap& a, const SemilinearMap& b) {
  // v^(s^a.k) A, then apply b:  v^(s^(a.k+b.k)) A^(s^b.k) B.
  const Matrix am = b.k ? frobenius(F, a.m, b.k) : a.m;
  return SemilinearMap{mul(F, am, b.m), (a.k + b.k) % F.e()};
}

SemilinearMap inverse(const Field& F, const SemilinearMap& a) {
  const int back = (F.e() - a.k) % F.e();
  Matrix inv = inverse(F, a.m);
  if (back) inv = frobenius(F, inv, back);
  return SemilinearMap{std::move(inv), back};
}

Vec apply(const Field& F, const SemilinearMap& g, const Vec& v) {
  return mul(F, g.k ? frobenius(F, v, g.k) : v, g.m);
}

Vec apply_point(const Field& F, const SemilinearMap& g, const Vec& v) { return normalize(F, apply(F, g, v)); }

Subspace apply(const SemilinearMap& g, const Subspace& s) {
  const Field& F = s.field();
  Matrix rows;
  rows.reserve(s.basis().size());
  for (const Vec& b : s.basis()) rows.push_back(apply(F, g, b));
  return rref(F, s.ambient_dim(), rows);
}

SemilinearMap projective_normalize(const Field& F, const SemilinearMap& g) {
  for (const Vec& row : g.m) {
    const int lead = row.leading();
    if (lead < 0) continue;
    const Fe s = F.inv(row[lead]);
    SemilinearMap out{Matrix{}, g.k};
    out.m.reserve(g.m.size());
    for (const Vec& r : g.m) out.m.push_back(scale(F, s, r));
    return out;
  }
  return g;
}

std::string projective_key(const Field& F, const SemilinearMap& g) {
  const SemilinearMap n = projective_normalize(F, g);
  std::string key;
  key.reserve(n.m.size() * (n.m.empty() ? 0 : n.m[0].size()) + 1);
  key.push_back(static_cast<char>(n.k));
  for (const Vec& r : n.m) {
    for (Fe c : r.coords()) key.push_back(static_cast<char>(c.value));
  }
  return key;
}

bool is_projective_identity(const Field& F, const SemilinearMap& g) {
  if (g.k != 0) {
    // A nontrivial automorphism composed with a scalar matrix still moves some point
    // unless the field is prime; k is reduced mod e so k != 0 implies e > 1.
    return false;
  }
  const SemilinearMap n = projective_normalize(F, g);
  return n.m == identity(F, static_cast<int>(n.m.size()));
}

std::optional<Fe> similarity_scalar(const Form& form, const SemilinearMap& g) {
  const Field& F = form.field();
  const int n = form.dim();
  if (static_cast<int>(g.m.size()) != n) return std::nullopt;
  std::optional<Fe> c;
  auto match = [&](Fe image, Fe original) {
    const Fe target = F.frobenius(original, g.k);
    if (target.value == 0) return image.value == 0;
    const Fe ratio = F.div(image, target);
    if (!c) c = ratio;
    return *c == ratio;
  };
  const Matrix& rows = g.m;
  for (int i = 0; i < n; ++i) {
    Vec ei(n);
    ei[i] = F.one();
    if (form.kind() == FormKind::Quadratic) {
      if (!match(form.quadratic(rows[i]), form.quadratic(ei))) return std::nullopt;
    }
    for (int j = 0; j < n; ++j) {
      Vec ej(n);
      ej[j] = F.one();
      if (!match(form.bilinear(rows[i], rows[j]), form.bilinear(ei, ej))) return std::nullopt;
    }
  }
  if (!c || c->value == 0) return std::nullopt;
  return c;
}

bool preserves_exactly(const Form& form, const SemilinearMap& g) {
  if (g.k != 0) return false;
  const auto c = similarity_scalar(form, g);
  return c && *c == form.field().one();
}

Vec restrict_scalars(const Field& F, const Vec& v, const Field& prime) {
  if (prime.order() != F.p()) throw FieldError("not the prime subfield");
  const int e = F.e();
  Vec out(v.size() * e);
  for (int i = 0; i < v.size(); ++i) {
    const auto c = F.coeffs(v[i]);
    for (int t = 0; t < e; ++t) out[i * e + t] = prime.element(c[t]);
  }
  return out;
}

Matrix realize_over_prime(const Field& F, const SemilinearMap& g, const Field& prime) {
  const int n = static_cast<int>(g.m.size());
  const int e = F.e();
  if (n * e > kMaxDim) throw DimensionError("realized dimension too large");
  Matrix out;
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < e; ++t) {
      Vec v(n);
      std::vector<int> c(e, 0);
      c[t] = 1;
      v[i] = F.from_coeffs(c);
      out.push_back(restrict_scalars(F, apply(F, g, v), prime));
    }
  }
  return out;
}

int dickson_invariant(const Field& F, const Matrix& g) {
  if (F.p() != 2) throw FieldError("Dickson invariant is implemented in characteristic 2 only");
  Matrix d = g;
  for (std::size_t i = 0; i < d.size(); ++i) d[i][static_cast<int>(i)] = F.sub(d[i][static_cast<int>(i)], F.one());
  return rank(F, d) % 2;
}

}  // namespace geomforge
