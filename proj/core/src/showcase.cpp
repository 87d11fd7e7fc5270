#include "geomforge/showcase.hpp"

#include <algorithm>
#include <unordered_map>

#include "geomforge/isometry.hpp"
#include "geomforge/presets.hpp"

namespace geomforge {

namespace {

bool disjoint(const Subspace& a, const Subspace& b) { return intersect(a, b).dim() == 0; }

/// Orbit of the pair (x, y) under permutations of the family, on a dense pair table.
std::uint64_t pair_orbit(const std::vector<Perm>& gens, int n, int x, int y, std::vector<char>& seen) {
  std::vector<int> stack{x * n + y};
  seen[x * n + y] = 1;
  std::uint64_t count = 1;
  while (!stack.empty()) {
    const int code = stack.back();
    stack.pop_back();
    const int a = code / n, b = code % n;
    for (const Perm& g : gens) {
      const int c = g[a] * n + g[b];
      if (!seen[c]) {
        seen[c] = 1;
        ++count;
        stack.push_back(c);
      }
    }
  }
  return count;
}

std::vector<Vec> nonsingular_points(const PolarSpace& P) {
  std::vector<Vec> out;
  for (const Vec& v : enumerate_points(Subspace::full(P.field(), P.ambient_dim()))) {
    if (P.form().quadratic(v).value != 0) out.push_back(v);
  }
  return out;
}

/// Reflection x -> x + B(x, v) phi(v)^-1 v.
Matrix reflection(const Form& form, const Vec& v) {
  const Field& F = form.field();
  const int n = form.dim();
  const Fe s = F.inv(form.quadratic(v));
  Matrix m = identity(F, n);
  for (int r = 0; r < n; ++r) {
    Vec e(n);
    e[r] = F.one();
    m[r] = axpy(F, m[r], F.mul(s, form.bilinear(e, v)), v);
  }
  return m;
}

}  // namespace

A9Model build_a9() {
  PresetGroup pg = preset_group("A9_O8plus");
  const Field& F = pg.group.field();
  const PolarSpace& P = *pg.space;
  A9Model out{P, pg.group, {}, true, true, group_order(pg.group)};
  std::vector<Vec> w8;
  for (int i = 0; i < 9; ++i) {
    Vec c(8);
    for (int k = 0; k < 8; ++k) c[k] = (k == i) ? F.zero() : F.one();
    w8.push_back(c);
    out.weight8.push_back(P.points().find(c));
  }
  for (std::size_t a = 0; a < w8.size(); ++a) {
    if (out.weight8[a] < 0) out.pairwise_nonperpendicular = false;
    for (std::size_t b = 0; b < w8.size(); ++b) {
      if (a != b && P.form().bilinear(w8[a], w8[b]) != F.one()) out.pairwise_nonperpendicular = false;
    }
  }
  for (const auto& g : pg.group.generators()) {
    if (!dickson_in_omega(P.form(), g.m)) out.generators_dickson0 = false;
  }
  return out;
}

SolidPairOrbit solid_pair_orbit(const std::vector<Perm>& on_family, const std::vector<Subspace>& family) {
  SolidPairOrbit out;
  const int n = static_cast<int>(family.size());
  out.family_size = n;
  std::vector<char> is_pair(static_cast<std::size_t>(n) * n, 0);
  int first = -1;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && disjoint(family[x], family[y])) {
        is_pair[x * n + y] = 1;
        ++out.ordered_pairs;
        if (first < 0) first = x * n + y;
      }
    }
  }
  out.disjoint_per_solid = n ? static_cast<int>(out.ordered_pairs / n) : 0;
  if (first < 0) return out;
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  out.orbit_size = pair_orbit(on_family, n, first / n, first % n, seen);
  out.transitive = out.orbit_size == out.ordered_pairs;
  return out;
}

A9SolidResult verify_a9_antiflag_via_solids(const A9Model& model) {
  A9SolidResult out;
  const SolidFamilies fam = solid_families(model.space);
  out.a9 = solid_pair_orbit(act_on_subspaces(model.group, fam.family_a).perms, fam.family_a);
  if (model.order && out.a9.orbit_size) out.pair_stabilizer = *model.order / out.a9.orbit_size;
  const PresetGroup omega = preset_group("Omega+(8,2)");
  const SolidFamilies ofam = solid_families(*omega.space);
  out.omega_baseline = solid_pair_orbit(act_on_subspaces(omega.group, ofam.family_a).perms, ofam.family_a);
  return out;
}

Omega7Result verify_omega7_example() {
  Omega7Result out;
  const PresetGroup pg = preset_group("Omega+(8,2)");
  const Group& G = pg.group;
  const PolarSpace& P = *pg.space;
  const Form& form = P.form();
  const Field& F = P.field();
  const int n = P.ambient_dim();

  const PointSet ns(F, n, nonsingular_points(P));
  out.nonsingular_points = ns.size();
  const Action on_ns = act_on_points(G, ns);
  out.nonsingular_transitive = static_cast<int>(orbit(on_ns.perms, on_ns.degree, 0).size()) == ns.size();

  const SolidFamilies fam = solid_families(P);
  const std::vector<Subspace>& m2 = fam.family_b;
  const Action on_m2 = act_on_subspaces(G, m2);
  {
    const Action on_m1 = act_on_subspaces(G, fam.family_a);
    out.families_preserved = on_m1.degree == on_m2.degree;  // act_on_subspaces throws otherwise
  }
  {
    std::unordered_map<Subspace, int> in_b;
    for (std::size_t i = 0; i < m2.size(); ++i) in_b.emplace(m2[i], static_cast<int>(i));
    out.reflections_swap = true;
    for (int i = 0; i < ns.size(); ++i) {
      const Subspace img = apply(linear_map(reflection(form, ns[i])), fam.family_a[0]);
      if (!in_b.count(img)) out.reflections_swap = false;
    }
  }

  // Stabilizer of v = ns[0] via Schreier generators, acting on family M2.
  const Vec v = ns[0];
  const Stabilizer st = schreier_stabilizer(G, on_ns, 0, {&on_m2});
  const std::vector<Perm>& h = st.induced[0];
  out.pairs = solid_pair_orbit(h, m2);

  // Rank of G_v on M2 from its orbits on ordered pairs.
  const int nm = static_cast<int>(m2.size());
  {
    std::vector<char> seen(static_cast<std::size_t>(nm) * nm, 0);
    std::vector<int> suborbit_of(nm, -1);
    for (int y = 0; y < nm; ++y) {
      if (seen[y]) continue;
      const std::uint64_t size = pair_orbit(h, nm, 0, y, seen);
      out.subdegrees.push_back(static_cast<int>(size / nm));
      for (int z = 0; z < nm; ++z) {
        if (seen[z] && suborbit_of[z] < 0) suborbit_of[z] = out.rank_on_family;
      }
      ++out.rank_on_family;
    }
    std::vector<int> sizes = out.subdegrees;
    std::sort(out.subdegrees.begin(), out.subdegrees.end());

    // Rank-3 parameters of the disjointness graph, and the split of its complement.
    std::vector<char> adj(static_cast<std::size_t>(nm) * nm, 0);
    for (int a = 0; a < nm; ++a) {
      for (int b = 0; b < nm; ++b) adj[a * nm + b] = a != b && disjoint(m2[a], m2[b]);
    }
    long long k = 0;
    for (int b = 0; b < nm; ++b) k += adj[b];
    long long lambda = -1, mu = -1;
    for (int b = 1; b < nm && (lambda < 0 || mu < 0); ++b) {
      long long common = 0;
      for (int c = 0; c < nm; ++c) common += adj[c] && adj[b * nm + c];
      if (adj[b] && lambda < 0) lambda = common;
      if (!adj[b] && mu < 0) mu = common;
    }
    out.rank3 = rank3_from_graph(k, nm - 1 - k, lambda, mu);

    // Gamma(x) = non-adjacent points other than x; it must split into two suborbits.
    std::vector<int> gamma_orbits;
    for (int s = 0; s < out.rank_on_family; ++s) {
      int rep = -1;
      for (int z = 1; z < nm; ++z) {
        if (suborbit_of[z] == s) {
          rep = z;
          break;
        }
      }
      if (rep > 0 && !adj[rep]) gamma_orbits.push_back(s);
    }
    if (gamma_orbits.size() == 2) {
      std::sort(gamma_orbits.begin(), gamma_orbits.end(),
                [&](int a, int b) { return sizes[a] < sizes[b]; });
      const int g1 = gamma_orbits[0], g2 = gamma_orbits[1];
      out.j = sizes[g1];
      out.jt_constant = true;
      long long first = -1;
      for (int y = 1; y < nm; ++y) {
        if (suborbit_of[y] != g2) continue;
        long long c = 0;
        for (int z = 1; z < nm; ++z) c += suborbit_of[z] == g1 && adj[y * nm + z];
        if (first < 0) first = c;
        if (c != first) out.jt_constant = false;
      }
      out.jt = first;
      out.rank4 = rank4_feasible(out.rank3, out.j, out.jt);
    }
  }

  // Exhaustive isometry counts: stabilizer of v, and of v together with a disjoint pair.
  {
    Matrix basis{v};
    for (int i = 0; i < n && static_cast<int>(basis.size()) < n; ++i) {
      Vec e(n);
      e[i] = F.one();
      Matrix trial = basis;
      trial.push_back(e);
      if (rank(F, trial) == static_cast<int>(trial.size())) basis = trial;
    }
    IsometryQuery query{basis, [&](int level, const Matrix& images) { return level != 0 || images[0] == v; }};
    out.v_isometries = for_each_isometry(form, query, [&](const Matrix& g) {
      if (dickson_invariant(F, g) == 0) ++out.v_stabilizer_order;
      return true;
    });
  }
  {
    int s1i = -1, s2i = -1;
    for (int a = 0; a < nm && s1i < 0; ++a) {
      for (int b = 0; b < nm; ++b) {
        if (a != b && disjoint(m2[a], m2[b])) {
          s1i = a;
          s2i = b;
          break;
        }
      }
    }
    const Subspace& S1 = m2[s1i];
    const Subspace& S2 = m2[s2i];
    // v = s1 + s2 with s_i in S_i.
    Matrix both = S1.basis();
    both.insert(both.end(), S2.basis().begin(), S2.basis().end());
    const Vec coeffs = mul(F, v, inverse(F, both));
    Vec s1(n);
    for (int i = 0; i < 4; ++i) s1 = axpy(F, s1, coeffs[i], S1.basis()[i]);
    Matrix basis{v};
    Matrix s1_rows{s1};
    for (const Vec& b : S1.basis()) {
      Matrix trial = s1_rows;
      trial.push_back(b);
      if (rank(F, trial) == static_cast<int>(trial.size()) && s1_rows.size() < 4) s1_rows = trial;
    }
    basis.insert(basis.end(), s1_rows.begin() + 1, s1_rows.end());
    basis.insert(basis.end(), S2.basis().begin(), S2.basis().end());
    IsometryQuery query{basis, [&](int level, const Matrix& images) {
                          if (level == 0) return images[0] == v;
                          return level <= 3 ? S1.contains(images[level]) : S2.contains(images[level]);
                        }};
    for_each_isometry(form, query, [&](const Matrix& g) {
      if (dickson_invariant(F, g) == 0) ++out.pair_stabilizer_order;
      return true;
    });
  }
  return out;
}

GammaResult verify_gamma_examples() {
  GammaResult out;
  const PresetGroup sl = preset_group("SL2_4");
  const PresetGroup sig = preset_group("SL2_4_semilinear");
  out.sl2_4 = antiflag_transitive(sl.group, AntiflagMode::Linear);
  out.sl2_4_sigma = antiflag_transitive(sig.group, AntiflagMode::Linear);
  out.sigma_order = group_order(sig.group);
  out.sigma_regular = out.sl2_4_sigma.transitive && out.sigma_order && *out.sigma_order == out.sl2_4_sigma.antiflags;
  const PointSet pg3 = PointSet::projective_space(sig.group.field(), 4);
  out.sigma_blocks = imprimitivity_blocks(act_on_points(sig.group, pg3).perms, pg3.size(), &pg3);
  const PresetGroup sl3 = preset_group("SL3_4_in_GL6_2");
  const PointSet pg5 = PointSet::projective_space(sl3.group.field(), 6);
  out.sl3_4_blocks = imprimitivity_blocks(act_on_points(sl3.group, pg5).perms, pg5.size(), &pg5);
  return out;
}

}  // namespace geomforge
