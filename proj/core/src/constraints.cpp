#include "geomforge/constraints.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace geomforge {

namespace {

__extension__ typedef __int128 i128;

std::optional<i128> checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<i128> checked_pow(i128 b, int k) {
  i128 r = 1;
  for (int i = 0; i < k; ++i) {
    auto next = checked_mul(r, b);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

long long ipow(long long b, int k) {
  auto r = checked_pow(b, k);
  if (!r || *r > static_cast<i128>(INT64_MAX)) throw ConstraintError("integer overflow");
  return static_cast<long long>(*r);
}

long long isqrt(long long n) {
  if (n < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

Rank3Params rank3_from_graph(long long k, long long l, long long lambda, long long mu) {
  if (k <= 0 || l <= 0 || mu <= 0 || mu >= k || lambda < 0) {
    throw ConstraintError("degenerate strongly regular parameters");
  }
  if (k * (k - lambda - 1) != l * mu) throw ConstraintError("k(k - lambda - 1) != l mu");
  const long long sum = lambda - mu;
  const long long prod = mu - k;
  const long long disc = sum * sum - 4 * prod;
  const long long root = isqrt(disc);
  if (root < 0 || root * root != disc || (sum + root) % 2 != 0) {
    throw ConstraintError("eigenvalues are not integral");
  }
  Rank3Params p{k, l, lambda, mu, (sum + root) / 2, (sum - root) / 2};
  if (p.mu != p.k + p.r * p.s || p.lambda != p.mu + p.r + p.s) throw ConstraintError("eigenvalue identities fail");
  return p;
}

bool printed_lambda_formula_holds(const Rank3Params& p) { return p.lambda == p.k + p.r + p.r * p.s; }

std::string to_string(Rank4Condition c) {
  switch (c) {
    case Rank4Condition::Pass: return "pass";
    case Rank4Condition::Precondition: return "precondition";
    case Rank4Condition::Split: return "12.1";
    case Rank4Condition::PhiUnique: return "12.2";
    case Rank4Condition::PhiDivides: return "12.3";
    case Rank4Condition::KlDivides: return "12.4";
  }
  return "?";
}

Rank4Verdict rank4_feasible(const Rank3Params& p, long long j, long long jt) {
  Rank4Verdict v;
  if (j <= 0 || j >= p.l || jt < 0 || jt > j) {
    v.reason = "requires 0 < j < l and 0 <= jt <= j";
    v.sides.push_back({"r", Rank4Condition::Precondition, p.r, p.s});
    v.sides.push_back({"s", Rank4Condition::Precondition, p.s, p.r});
    return v;
  }
  for (int side = 0; side < 2; ++side) {
    Rank4Side out;
    out.split = side == 0 ? "r" : "s";
    const long long a = side == 0 ? p.r : p.s;
    const long long b = side == 0 ? p.s : p.r;
    out.split_value = a;
    out.other_value = b;
    const long long g = std::gcd(j * (b + 1), p.l);
    out.phi_num = -j * (b + 1) / (g ? g : 1);
    out.phi_den = p.l / (g ? g : 1);
    // Conditions scaled by j so that t = jt / j never has to be integral.
    if (a * (b + 1) * j + p.l * jt != 0) {
      out.failed = Rank4Condition::Split;
    } else if (b * (a + 1) * j + p.l * jt == 0) {
      out.failed = Rank4Condition::PhiUnique;
    } else if (j % (p.l / std::gcd(p.l, std::llabs(b + 1))) != 0) {
      out.failed = Rank4Condition::PhiDivides;
    } else {
      const i128 lhs = static_cast<i128>(p.k) * p.l;
      const i128 rhs = static_cast<i128>(j) * (p.l - j) * a * (b + 1);
      if (rhs % lhs != 0) out.failed = Rank4Condition::KlDivides;
    }
    if (out.failed == Rank4Condition::Pass && !v.passing_side) v.passing_side = out.split;
    v.sides.push_back(out);
  }
  v.feasible = v.passing_side.has_value();
  if (!v.feasible) {
    v.reason = "r-side fails " + to_string(v.sides[0].failed) + ", s-side fails " + to_string(v.sides[1].failed);
  }
  return v;
}

std::vector<std::pair<int, int>> section13_pairs() { return {{2, 1}, {3, 1}, {4, 2}, {5, 1}, {9, 3}}; }

std::vector<Section13Row> section13_eliminate(int m_lo, int m_hi, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Section13Row> rows;
  for (const auto& [q, h] : pairs) {
    for (int m = m_lo; m <= m_hi; ++m) {
      Section13Row row;
      row.q = q;
      row.h = h;
      row.m = m;
      row.rhs = static_cast<long long>(q - 1) * h * (q - h);
      const long long base = ipow(q, m - 1);
      row.minus_term = base - 1;
      row.plus_term = base + 1;
      row.divides_minus = row.rhs % row.minus_term == 0;
      row.divides_plus = row.rhs % row.plus_term == 0;

      // k = q(q^(2m-2)-1)/(q-1), l = q^(2m-1), j = q^(2m-2) h, r(s+1) = -q^(m-1)(q^(m-1) -+ 1).
      auto q2m2 = checked_pow(q, 2 * m - 2);
      auto l = checked_pow(q, 2 * m - 1);
      if (q2m2 && l) {
        const i128 k = static_cast<i128>(q) * (*q2m2 - 1) / (q - 1);
        const i128 j = *q2m2 * h;
        auto kl = checked_mul(k, *l);
        auto jl = checked_mul(j, *l - j);
        for (int sign = 0; sign < 2; ++sign) {
          const i128 term = static_cast<i128>(base) * (sign == 0 ? base - 1 : base + 1);
          std::optional<i128> prod = jl ? checked_mul(*jl, term) : std::nullopt;
          if (kl && prod) {
            const bool divides = *prod % *kl == 0;
            (sign == 0 ? row.direct_minus : row.direct_plus) = divides;
          }
        }
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string section13_csv(const std::vector<Section13Row>& rows) {
  auto opt = [](const std::optional<bool>& b) -> std::string { return b ? (*b ? "1" : "0") : ""; };
  std::ostringstream out;
  out << "q,h,m,rhs,q^(m-1)-1,q^(m-1)+1,divides_minus,divides_plus,direct_minus,direct_plus,eliminated\n";
  for (const auto& r : rows) {
    out << r.q << ',' << r.h << ',' << r.m << ',' << r.rhs << ',' << r.minus_term << ',' << r.plus_term << ','
        << r.divides_minus << ',' << r.divides_plus << ',' << opt(r.direct_minus) << ',' << opt(r.direct_plus) << ','
        << r.eliminated() << '\n';
  }
  return out.str();
}

std::string to_string(ZsigmondyOutcome o) {
  switch (o) {
    case ZsigmondyOutcome::Primitive: return "primitive";
    case ZsigmondyOutcome::MersenneK2: return "mersenne_k2";
    case ZsigmondyOutcome::QK64: return "q_k_64";
  }
  return "?";
}

std::vector<long long> prime_factors(unsigned long long n) {
  std::vector<long long> out;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(static_cast<long long>(d));
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(static_cast<long long>(n));
  return out;
}

ZsigmondyResult zsigmondy(long long q, int k) {
  if (q < 2 || k < 2) throw ConstraintError("zsigmondy needs q > 1 and k > 1");
  long long p = 2;
  while (q % p) ++p;
  int e = 0;
  for (long long t = q; t > 1; t /= p) {
    if (t % p) throw ConstraintError("q is not a prime power");
    ++e;
  }
  ZsigmondyResult res{q, k, ZsigmondyOutcome::Primitive, 0};
  const long long n = ipow(q, k) - 1;
  for (long long r : prime_factors(static_cast<unsigned long long>(n))) {
    bool primitive = true;
    for (int i = 1; i < e * k; ++i) {
      // r | p^i - 1 ?
      long long acc = 1;
      for (int t = 0; t < i; ++t) acc = static_cast<long long>((static_cast<i128>(acc) * p) % r);
      if (acc == 1 % r) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      res.prime = r;
      return res;
    }
  }
  const bool mersenne = e == 1 && ((q + 1) & q) == 0;
  res.outcome = (k == 2 && mersenne) ? ZsigmondyOutcome::MersenneK2 : ZsigmondyOutcome::QK64;
  if (res.outcome == ZsigmondyOutcome::QK64 && n != 63) {
    throw ConstraintError("no primitive divisor outside the known exceptions");
  }
  return res;
}

std::string to_string(Case31 c) {
  switch (c) {
    case Case31::CaseI: return "i";
    case Case31::CaseII: return "ii";
    case Case31::Infeasible: return "infeasible";
  }
  return "?";
}

Case31Result classify_31_case(long long q, int m, int h, int f1, int e2) {
  if (q < 2 || m < 1 || h < 1 || f1 < 0 || e2 < 0) throw ConstraintError("classify_31_case needs positive inputs");
  auto pw = [&](int k) {
    auto r = checked_pow(q, k);
    if (!r) throw ConstraintError("integer overflow");
    return *r;
  };
  Case31Result res;
  const i128 lhs = (pw(m) - q) * (pw(m) - pw(f1));
  const i128 rhs = (pw(h) - pw(m)) * (pw(e2) - 1);
  res.identity_holds = lhs == rhs;
  if (!res.identity_holds) {
    res.reason = "(q^m - q)(q^m - q^f1) != (q^h - q^m)(q^e2 - 1)";
    return res;
  }
  if (1 + f1 != m) {
    res.reason = "identity holds but 1 + f1 != m";
    return res;
  }
  if (m - 1 == e2 && h - m == 1) {
    res.which = Case31::CaseI;
    return res;
  }
  if (m - 1 == h - m && e2 == 1) {
    if (m >= 3 && (m - 1) % (m - 2) == 0) {
      res.which = Case31::CaseII;
    } else {
      res.reason = "case (ii) needs m - 2 | m - 1";
    }
    return res;
  }
  res.reason = "neither case matches";
  return res;
}

}  // namespace geomforge
