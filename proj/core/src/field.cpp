#include "geomforge/field.hpp"

#include <string>

namespace geomforge {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<int, int> prime_power(int q) {
  if (q < 2) throw FieldError("not a prime power: " + std::to_string(q));
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw FieldError("not a prime power: " + std::to_string(q));
  return {p, e};
}

namespace poly {

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  return trim(std::move(r));
}

Poly mod(Poly a, const Poly& m, int p) {
  a = trim(std::move(a));
  const Poly mt = trim(m);
  if (mt.empty()) throw FieldError("polynomial division by zero");
  // Inverse of the leading coefficient in GF(p).
  int lead = mt.back();
  int lead_inv = 1;
  while ((lead * lead_inv) % p != 1) ++lead_inv;
  while (a.size() >= mt.size()) {
    const int factor = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - mt.size();
    for (std::size_t i = 0; i < mt.size(); ++i) {
      a[shift + i] = ((a[shift + i] - factor * mt[i]) % p + p) % p;
    }
    a = trim(std::move(a));
  }
  return a;
}

bool is_irreducible(const Poly& monic, int p) {
  const Poly m = trim(monic);
  const int deg = static_cast<int>(m.size()) - 1;
  if (deg < 1) return false;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly f(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        f[i] = static_cast<int>(c % p);
        c /= p;
      }
      f[d] = 1;
      if (mod(m, f, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace poly

namespace {

// Monic polynomials of degree e in lexicographic order of (c_0, c_1, ..., c_{e-1}),
// c_0 most significant.
poly::Poly least_irreducible(int p, int e) {
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    poly::Poly f(e + 1, 0);
    long long c = code;
    for (int i = e - 1; i >= 0; --i) {
      f[i] = static_cast<int>(c % p);
      c /= p;
    }
    f[e] = 1;
    if (poly::is_irreducible(f, p)) return f;
  }
  throw FieldError("no irreducible polynomial found");
}

std::vector<int> to_coeffs(int index, int p, int e) {
  std::vector<int> c(e);
  for (int i = 0; i < e; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

int to_index(const std::vector<int>& c, int p) {
  int index = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) index = index * p + *it;
  return index;
}

}  // namespace

Field Field::make(int p, int e) {
  if (!is_prime(p)) throw FieldError("characteristic is not prime: " + std::to_string(p));
  if (e < 1) throw FieldError("extension degree must be positive");
  long long q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  if (q > kMaxOrder) throw FieldError("field order exceeds " + std::to_string(kMaxOrder));

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = static_cast<int>(q);
  t->modulus = least_irreducible(p, e);
  const int n = t->q;
  t->add.resize(static_cast<std::size_t>(n) * n);
  t->mul.resize(static_cast<std::size_t>(n) * n);
  t->neg.resize(n);
  t->inv.resize(n, 0);
  t->frob.resize(n);

  std::vector<std::vector<int>> cs(n);
  for (int a = 0; a < n; ++a) cs[a] = to_coeffs(a, p, e);
  for (int a = 0; a < n; ++a) {
    std::vector<int> ng(e);
    for (int i = 0; i < e; ++i) ng[i] = (p - cs[a][i]) % p;
    t->neg[a] = static_cast<std::uint8_t>(to_index(ng, p));
    for (int b = 0; b < n; ++b) {
      std::vector<int> s(e);
      for (int i = 0; i < e; ++i) s[i] = (cs[a][i] + cs[b][i]) % p;
      t->add[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint8_t>(to_index(s, p));
      poly::Poly prod = poly::mod(poly::mul(poly::trim(cs[a]), poly::trim(cs[b]), p), t->modulus, p);
      prod.resize(e, 0);
      t->mul[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint8_t>(to_index(prod, p));
    }
  }
  for (int a = 1; a < n; ++a) {
    for (int b = 1; b < n; ++b) {
      if (t->mul[static_cast<std::size_t>(a) * n + b] == 1) {
        t->inv[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    int r = 1;
    for (int i = 0; i < p; ++i) r = t->mul[static_cast<std::size_t>(r) * n + a];
    t->frob[a] = static_cast<std::uint8_t>(a == 0 ? 0 : r);
  }
  for (int a = 1; a < n; ++a) {
    int order = 1;
    int r = a;
    while (r != 1) {
      r = t->mul[static_cast<std::size_t>(r) * n + a];
      ++order;
    }
    if (order == n - 1) {
      t->primitive = static_cast<std::uint8_t>(a);
      break;
    }
  }
  return Field(std::move(t));
}

Field Field::of_order(int q) {
  const auto [p, e] = prime_power(q);
  return make(p, e);
}

Fe Field::element(int index) const {
  if (index < 0 || index >= order()) {
    throw FieldError("element index out of range: " + std::to_string(index));
  }
  return Fe{static_cast<std::uint8_t>(index)};
}

std::vector<Fe> Field::elements() const {
  std::vector<Fe> out;
  out.reserve(order());
  for (int i = 0; i < order(); ++i) out.push_back(Fe{static_cast<std::uint8_t>(i)});
  return out;
}

std::vector<int> Field::coeffs(Fe a) const { return to_coeffs(a.value, p(), e()); }

Fe Field::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) != e()) throw FieldError("coefficient vector has wrong length");
  std::vector<int> r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = ((c[i] % p()) + p()) % p();
  return element(to_index(r, p()));
}

Fe Field::inv(Fe a) const {
  if (a.value == 0) throw FieldError("inverse of zero");
  return Fe{tables_->inv[a.value]};
}

Fe Field::pow(Fe a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Fe result = one();
  Fe base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Fe Field::frobenius(Fe a, int k) const {
  k %= e();
  if (k < 0) k += e();
  for (int i = 0; i < k; ++i) a = Fe{tables_->frob[a.value]};
  return a;
}

bool Field::is_square(Fe a) const {
  if (a.value == 0 || p() == 2) return true;
  return pow(a, (order() - 1) / 2) == one();
}

}  // namespace geomforge
