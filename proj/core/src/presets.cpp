#include "geomforge/presets.hpp"

#include <numeric>
#include <regex>

#include "geomforge/hexagon.hpp"

namespace geomforge {

namespace {

__extension__ typedef unsigned __int128 u128;

std::vector<Fe> additive_basis(const Field& F) {
  std::vector<Fe> out;
  for (int t = 0; t < F.e(); ++t) {
    std::vector<int> c(F.e(), 0);
    c[t] = 1;
    out.push_back(F.from_coeffs(c));
  }
  return out;
}

Vec unit(int n, int i) {
  Vec v(n);
  v[i] = Fe{1};
  return v;
}

/// I + column (x) row, where column[r] = B(e_r, v) and the map is x -> x + B(x, v) a w.
Matrix rank_one_update(const Field& F, const Form& form, const Vec& v, Fe a, const Vec& w, Matrix m) {
  const int n = form.dim();
  for (int r = 0; r < n; ++r) {
    const Fe c = F.mul(a, form.bilinear(unit(n, r), v));
    if (c.value == 0) continue;
    m[r] = axpy(F, m[r], c, w);
  }
  return m;
}

std::optional<std::uint64_t> to_u64(u128 v) {
  if (v > static_cast<u128>(~0ULL)) return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

u128 ipow(u128 b, int k) {
  u128 r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

std::optional<std::uint64_t> psl_order(int n, int q) {
  u128 o = ipow(q, n * (n - 1) / 2);
  for (int i = 2; i <= n; ++i) o *= ipow(q, i) - 1;
  return to_u64(o / std::gcd(n, q - 1));
}

std::optional<std::uint64_t> psp_order(int m, int q) {
  u128 o = ipow(q, m * m);
  for (int i = 1; i <= m; ++i) o *= ipow(q, 2 * i) - 1;
  return to_u64(o / std::gcd(2, q - 1));
}

std::optional<std::uint64_t> psu_order(int n, int q0) {
  u128 o = ipow(q0, n * (n - 1) / 2);
  for (int i = 2; i <= n; ++i) o *= (i % 2 == 0) ? ipow(q0, i) - 1 : ipow(q0, i) + 1;
  return to_u64(o / std::gcd(n, q0 + 1));
}

std::optional<std::uint64_t> pomega_even_order(int m, int q, int eps) {
  u128 o = ipow(q, m * (m - 1));
  o *= eps > 0 ? ipow(q, m) - 1 : ipow(q, m) + 1;
  for (int i = 1; i < m; ++i) o *= ipow(q, 2 * i) - 1;
  const u128 qm = eps > 0 ? ipow(q, m) - 1 : ipow(q, m) + 1;
  return to_u64(o / static_cast<u128>(std::gcd(4, static_cast<int>(qm % 4))));
}

std::vector<SemilinearMap> realize_all(const Field& F, const std::vector<SemilinearMap>& gens) {
  const Field prime = Field::make(F.p(), 1);
  std::vector<SemilinearMap> out;
  for (const auto& g : gens) out.push_back(linear_map(realize_over_prime(F, g, prime)));
  return out;
}

}  // namespace

std::vector<SemilinearMap> sl_generators(const Field& F, int n) {
  std::vector<SemilinearMap> gens;
  for (int i = 0; i + 1 < n; ++i) {
    for (const auto& [r, c] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
      for (Fe a : additive_basis(F)) {
        Matrix m = identity(F, n);
        m[r][c] = a;
        gens.push_back(linear_map(std::move(m)));
      }
    }
  }
  return gens;
}

std::vector<SemilinearMap> symplectic_transvections(const Form& form) {
  const Field& F = form.field();
  const int n = form.dim();
  std::vector<Vec> vs;
  for (int i = 0; i < n; ++i) vs.push_back(unit(n, i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) vs.push_back(add(F, unit(n, i), unit(n, j)));
  }
  std::vector<SemilinearMap> gens;
  for (const Vec& v : vs) {
    for (Fe a : additive_basis(F)) gens.push_back(linear_map(rank_one_update(F, form, v, a, v, identity(F, n))));
  }
  return gens;
}

std::vector<SemilinearMap> unitary_transvections(const Form& form) {
  const Field& F = form.field();
  const int n = form.dim();
  const int q0 = form.conjugation_order();
  std::vector<Fe> trace_zero;
  for (Fe a : F.elements()) {
    if (a.value != 0 && F.pow(a, q0) == F.neg(a)) trace_zero.push_back(a);
  }
  std::vector<SemilinearMap> gens;
  for (const Vec& v : enumerate_points(Subspace::full(F, n))) {
    if (form.bilinear(v, v).value != 0) continue;
    for (Fe a : trace_zero) gens.push_back(linear_map(rank_one_update(F, form, v, a, v, identity(F, n))));
  }
  return gens;
}

std::vector<SemilinearMap> eichler_generators(const Form& form) {
  const Field& F = form.field();
  const int n = form.dim();
  std::vector<SemilinearMap> gens;
  for (int i = 0; i < n; ++i) {
    const Vec u = unit(n, i);
    if (form.quadratic(u).value != 0) continue;
    for (int j = 0; j < n; ++j) {
      if (j == i || form.bilinear(u, unit(n, j)).value != 0) continue;
      for (Fe a : additive_basis(F)) {
        const Vec w = scale(F, a, unit(n, j));
        Matrix m = identity(F, n);
        m = rank_one_update(F, form, u, F.one(), w, m);
        m = rank_one_update(F, form, w, F.neg(F.one()), u, m);
        m = rank_one_update(F, form, u, F.neg(form.quadratic(w)), u, m);
        gens.push_back(linear_map(std::move(m)));
      }
    }
  }
  return gens;
}

Matrix even_weight_permutation(const std::vector<int>& perm) {
  const Field F = Field::make(2, 1);
  if (perm.size() != 9) throw GroupError("expected a permutation of 9 points");
  Matrix m;
  for (int i = 0; i < 8; ++i) {
    std::vector<int> x(9, 0);
    x[perm[i]] ^= 1;
    x[perm[8]] ^= 1;
    Vec row(8);
    for (int k = 0; k < 8; ++k) row[k] = F.element(x[k]);
    m.push_back(row);
  }
  return m;
}

Form even_weight_form() {
  const Field F = Field::make(2, 1);
  Matrix q(8, Vec(8));
  for (int i = 0; i < 8; ++i) {
    for (int j = i; j < 8; ++j) q[i][j] = F.one();
  }
  return Form::quadratic(F, std::move(q));
}

PresetGroup preset_group(const std::string& name) {
  static const std::regex param(R"(^(SL|Sp|SU|Omega\+|Omega-|Omega|reducible)\((\d+),(\d+)\)$)");
  std::smatch m;
  if (std::regex_match(name, m, param)) {
    const std::string kind = m[1];
    const int n = std::stoi(m[2]);
    const int q = std::stoi(m[3]);
    if (n < 2 || n > kMaxDim) throw GroupError("dimension out of range in " + name);
    if (kind == "SL") {
      const Field F = Field::of_order(q);
      return {Group(name, F, n, sl_generators(F, n)), std::nullopt, psl_order(n, q)};
    }
    if (kind == "reducible") {
      const Field F = Field::of_order(q);
      std::vector<SemilinearMap> gens;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j + 1 < n; ++j) {
          if (i == j) continue;
          for (Fe a : additive_basis(F)) {
            Matrix mm = identity(F, n);
            mm[i][j] = a;
            gens.push_back(linear_map(std::move(mm)));
          }
        }
      }
      return {Group(name, F, n, std::move(gens)), std::nullopt, std::nullopt};
    }
    if (kind == "Sp") {
      PolarSpace P = PolarSpace::standard(PolarType::Symplectic, n, q);
      Group G(name, P.field(), n, symplectic_transvections(P.form()), P.form());
      return {std::move(G), std::move(P), psp_order(n / 2, q)};
    }
    if (kind == "SU") {
      PolarSpace P = PolarSpace::standard(PolarType::Unitary, n, q);
      Group G(name, P.field(), n, unitary_transvections(P.form()), P.form());
      // SU(3, 2) is solvable and its transvections generate a subgroup of order 18.
      const bool generated = n >= 4 || (n == 3 && q > 2);
      return {std::move(G), std::move(P), generated ? psu_order(n, q) : std::nullopt};
    }
    const PolarType type = kind == "Omega+" ? PolarType::OrthogonalPlus
                           : kind == "Omega-" ? PolarType::OrthogonalMinus
                                              : PolarType::OrthogonalOdd;
    PolarSpace P = PolarSpace::standard(type, n, q);
    Group G(name, P.field(), n, eichler_generators(P.form()), P.form());
    std::optional<std::uint64_t> order;
    if (type == PolarType::OrthogonalOdd) order = psp_order((n - 1) / 2, q);
    if (type == PolarType::OrthogonalPlus) order = pomega_even_order(n / 2, q, 1);
    if (type == PolarType::OrthogonalMinus) order = pomega_even_order(n / 2, q, -1);
    return {std::move(G), std::move(P), order};
  }
  if (name == "A9_O8plus") {
    const Form form = even_weight_form();
    PolarSpace P = PolarSpace::from_form(PolarType::OrthogonalPlus, form);
    std::vector<SemilinearMap> gens{linear_map(even_weight_permutation({1, 2, 0, 3, 4, 5, 6, 7, 8})),
                                    linear_map(even_weight_permutation({1, 2, 3, 4, 5, 6, 7, 8, 0}))};
    for (const auto& g : gens) {
      if (!preserves_exactly(form, g)) throw GroupError("A9 generator does not preserve the form");
    }
    return {Group(name, form.field(), 8, std::move(gens), form), std::move(P), 181440};
  }
  if (name == "SL2_4" || name == "SL2_4_semilinear") {
    const Field F4 = Field::of_order(4);
    std::vector<SemilinearMap> gens = sl_generators(F4, 2);
    if (name == "SL2_4_semilinear") gens.push_back(SemilinearMap{identity(F4, 2), 1});
    return {Group(name, Field::make(2, 1), 4, realize_all(F4, gens)), std::nullopt,
            name == "SL2_4" ? 60 : 120};
  }
  if (name == "SL3_4_in_GL6_2") {
    const Field F4 = Field::of_order(4);
    return {Group(name, Field::make(2, 1), 6, realize_all(F4, sl_generators(F4, 3))), std::nullopt, 60480};
  }
  if (name == "hexagon_stabilizer_q2") {
    const HexagonModel M = build_split_cayley(2);
    const SymplecticHexagon S = hexagon_in_sp6(M);
    HexagonStabilizer st = hexagon_stabilizer_q2(S);
    return {std::move(st.group), S.space, st.order};
  }
  throw GroupError("unknown preset: " + name);
}

std::vector<std::string> standard_preset_names() {
  return {"SL(3,2)",  "SL(4,2)",         "SL(3,3)",          "Sp(4,2)",        "Sp(6,2)",
          "Sp(4,3)",  "SU(3,3)",         "Omega+(6,2)",      "Omega-(6,2)",    "reducible(4,2)",
          "SL2_4",    "SL2_4_semilinear", "SL3_4_in_GL6_2",  "hexagon_stabilizer_q2"};
}

}  // namespace geomforge
