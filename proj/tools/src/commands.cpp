#include "geomforge_cli/commands.hpp"

#include <algorithm>
#include <sstream>

#include "geomforge/group.hpp"
#include "geomforge/hexagon.hpp"
#include "geomforge/incidence.hpp"
#include "geomforge/presets.hpp"
#include "geomforge/showcase.hpp"
#include "geomforge_cli/geometry_io.hpp"

namespace geomforge::cli {

namespace {

std::uint64_t ipow(std::uint64_t b, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

std::string describe(const Field& F, const char* what, std::initializer_list<Fe> args) {
  std::ostringstream os;
  os << what << " fails at GF(" << F.order() << ") elements";
  for (Fe a : args) os << " " << static_cast<int>(a.value);
  return os.str();
}

Json regularity_json(const RegularityResult& r) {
  Json out = Json::object();
  out["regular"] = r.regular;
  if (r.profile) {
    out["diameter"] = r.profile->diameter;
    out["sizes"] = r.profile->sizes;
    out["c"] = r.profile->c;
    out["a"] = r.profile->a;
    out["b"] = r.profile->b;
  } else {
    out["reason"] = r.reason;
  }
  return out;
}

/// Points the group naturally acts on: Omega when a polar space is attached,
/// otherwise the projective space.
PointSet acting_points(const PresetGroup& pg) {
  if (pg.space) return pg.space->points();
  return PointSet::projective_space(pg.group.field(), pg.group.dim());
}

Json rank3_json(const Rank3Params& p) {
  Json out = Json::object();
  out["k"] = p.k;
  out["l"] = p.l;
  out["lambda"] = p.lambda;
  out["mu"] = p.mu;
  out["r"] = p.r;
  out["s"] = p.s;
  return out;
}

Json rank4_json(const Rank4Verdict& v) {
  Json out = Json::object();
  out["feasible"] = v.feasible;
  out["passing_side"] = v.passing_side ? Json(*v.passing_side) : Json(nullptr);
  out["reason"] = v.reason;
  Json sides = Json::array();
  for (const auto& s : v.sides) {
    Json j = Json::object();
    j["split"] = s.split;
    j["failed"] = to_string(s.failed);
    j["split_value"] = s.split_value;
    j["other_value"] = s.other_value;
    j["phi"] = std::to_string(s.phi_num) + "/" + std::to_string(s.phi_den);
    sides.push_back(std::move(j));
  }
  out["sides"] = std::move(sides);
  return out;
}

void add_stabilizer_checks(Report& r, const SymplecticHexagon& S) {
  const int q = 2;
  const HexagonStabilizer st = hexagon_stabilizer_q2(S);
  const std::uint64_t expected_order = (ipow(q, 6) - 1) * ipow(q, 6) * (ipow(q, 2) - 1);
  r.expect("symplectic_isometries", 1451520, st.symplectic_isometries);
  r.expect("stabilizer_order", expected_order, st.order);
  const auto generated = group_order(st.group);
  r.expect("generated_order", expected_order, generated ? Json(*generated) : Json(nullptr));
  r.counts["stabilizer_generators"] = st.group.generators().size();

  const Action on_points = act_on_points(st.group, S.space.points());
  const auto hexagons = ordered_hexagons(S.geometry);
  r.expect("ordered_hexagons", expected_order, hexagons.size());
  const std::uint64_t hex_orbit = hexagons.empty() ? 0 : tuple_orbit_size(on_points.perms, hexagons[0]);
  r.expect("hexagon_orbit", hexagons.size(), hex_orbit);
  r.expect("hexagon_stabilizer", 1, hex_orbit == 0 ? Json(nullptr) : Json(st.order / hex_orbit));

  const RankResult rank = rank_of(st.group, on_points, 0);
  r.expect("rank", 4, rank.rank);
  r.expect("subdegrees", std::vector<int>{1, 6, 24, 32}, rank.subdegrees);

  const InvariantChain chain = invariant_chain(st.group, S.space.points(), 0, &S.space);
  r.check("chain", chain.ok, true, chain.ok).witness = chain.failure.empty() ? std::optional<Json>() : Json(chain.failure);
  r.expect("chain_dims", std::vector<int>{1, 3, 5, 6}, chain.dims);
  const Subspace x_perp = S.space.perp(Subspace::point(S.space.field(), S.space.points()[0]));
  r.expect("chain_w2_is_perp", true, chain.spaces.size() > 2 && chain.spaces[2] == x_perp);
  r.expect("chain_perp_relation", true, chain.perp_relation.value_or(false));

  const OrbitSplit lines = orbit_split(st.group, S.space.totally_singular(2));
  const OrbitSplit planes = orbit_split(st.group, S.space.totally_singular(3));
  r.expect("ti_lines_split", std::vector<int>{252, 63}, lines.sizes);
  r.expect("ti_planes_split", std::vector<int>{static_cast<int>(ipow(q, 3) * (ipow(q, 3) + 1)), 63}, planes.sizes);
  r.counts["ti_lines"] = lines.total;
  r.counts["ti_planes"] = planes.total;
}

}  // namespace

std::optional<std::string> field_axiom_violation(const Field& F) {
  const std::vector<Fe> els = F.elements();
  const Fe zero = F.zero();
  const Fe one = F.one();
  for (Fe a : els) {
    if (F.add(a, zero) != a) return describe(F, "additive identity", {a});
    if (F.mul(a, one) != a) return describe(F, "multiplicative identity", {a});
    if (F.add(a, F.neg(a)) != zero) return describe(F, "additive inverse", {a});
    if (a != zero && F.mul(a, F.inv(a)) != one) return describe(F, "multiplicative inverse", {a});
    for (Fe b : els) {
      if (F.add(a, b) != F.add(b, a)) return describe(F, "additive commutativity", {a, b});
      if (F.mul(a, b) != F.mul(b, a)) return describe(F, "multiplicative commutativity", {a, b});
      if (a != zero && b != zero && F.mul(a, b) == zero) return describe(F, "no zero divisors", {a, b});
      if (F.frobenius(F.add(a, b), 1) != F.add(F.frobenius(a, 1), F.frobenius(b, 1))) {
        return describe(F, "additive Frobenius", {a, b});
      }
      if (F.frobenius(F.mul(a, b), 1) != F.mul(F.frobenius(a, 1), F.frobenius(b, 1))) {
        return describe(F, "multiplicative Frobenius", {a, b});
      }
      for (Fe c : els) {
        if (F.add(F.add(a, b), c) != F.add(a, F.add(b, c))) return describe(F, "additive associativity", {a, b, c});
        if (F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c))) {
          return describe(F, "multiplicative associativity", {a, b, c});
        }
        if (F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c))) return describe(F, "distributivity", {a, b, c});
      }
    }
  }
  return std::nullopt;
}

Report run_field(int q) {
  const Field F = Field::of_order(q);
  Report r;
  r.command = "field";
  r.parameters["q"] = q;
  const auto violation = field_axiom_violation(F);
  r.check("axioms", !violation, "none", violation ? Json(*violation) : Json("none"));
  int order = 1;
  for (Fe x = F.primitive(); x != F.one(); x = F.mul(x, F.primitive())) ++order;
  r.expect("primitive_order", q - 1, order);
  int frob_order = 0;
  for (int k = 1; k <= F.e(); ++k) {
    bool identity = true;
    for (Fe a : F.elements()) identity = identity && F.frobenius(a, k) == a;
    if (identity) {
      frob_order = k;
      break;
    }
  }
  r.expect("frobenius_order", F.e(), frob_order);
  r.counts["p"] = F.p();
  r.counts["e"] = F.e();
  r.counts["modulus"] = F.modulus();
  r.counts["primitive"] = static_cast<int>(F.primitive().value);
  return r;
}

Report run_polar(PolarType type, int n, int q, bool full_report) {
  const PolarSpace P = PolarSpace::standard(type, n, q);
  Report r;
  r.command = "polar";
  r.parameters["kind"] = to_string(type);
  r.parameters["n"] = n;
  r.parameters["q"] = q;
  r.parameters["report"] = full_report;
  r.expect("point_count", expected_point_count(type, n, q), P.points().size());
  r.expect("rank", expected_rank(type, n), P.rank());
  for (int i = 1; i <= P.rank(); ++i) {
    const Verify92Result v = verify_9_2(P, i);
    auto& verdict = r.check("perp_difference_i" + std::to_string(i), v.passed, v.expected,
                            v.counterexample ? v.counterexample_count : v.first_count);
    if (v.counterexample) {
      Json w = Json::object();
      w["T"] = to_json(v.counterexample->first);
      w["W"] = to_json(v.counterexample->second);
      verdict.witness = std::move(w);
    }
  }
  r.counts["points"] = P.points().size();
  r.counts["rank"] = P.rank();
  r.counts["type_constant_twice"] = P.type_constant_twice();
  r.counts["field_order"] = P.field().order();
  if (full_report) {
    Json pts = Json::array();
    for (const Vec& v : P.points().points()) pts.push_back(to_json(v));
    r.counts["point_coords"] = std::move(pts);
    const auto maximal = P.max_ts_subspaces();
    Json subs = Json::array();
    for (const Subspace& s : maximal) subs.push_back(P.points().ids_in(s));
    r.counts["maximal_ts"] = maximal.size();
    r.counts["maximal_ts_points"] = std::move(subs);
    if (type == PolarType::OrthogonalPlus) {
      const SolidFamilies fam = solid_families(P);
      r.expect("family_sizes_equal", true, fam.family_a.size() == fam.family_b.size());
      Json fa = Json::array();
      for (const Subspace& s : fam.family_a) fa.push_back(P.points().ids_in(s));
      Json fb = Json::array();
      for (const Subspace& s : fam.family_b) fb.push_back(P.points().ids_in(s));
      r.counts["family_a"] = std::move(fa);
      r.counts["family_b"] = std::move(fb);
    }
  }
  return r;
}

Report run_ngon(const std::string& path, bool allow_thin) {
  const IncidenceGeometry G = load_geometry(path);
  Report r;
  r.command = "ngon";
  r.parameters["in"] = path;
  r.parameters["allow_thin"] = allow_thin;
  const NgonResult ng = check_generalized_ngon(G, allow_thin);
  auto& v = r.check("generalized_ngon", ng.ok, true, ng.ok);
  if (!ng.ok) {
    Json w = Json::object();
    w["reason"] = ng.reason;
    if (ng.witness) w["levi_pair"] = std::vector<int>{ng.witness->first, ng.witness->second};
    v.witness = std::move(w);
  }
  const LeviStats ls = levi_girth_diameter(G);
  if (ng.ok) {
    r.expect("levi_girth", 2 * ng.n, ls.girth);
    r.expect("levi_diameter", ng.n, ls.diameter);
    if (ng.thick) r.expect("feit_higman", true, ng.feit_higman);
  }
  r.counts["points"] = G.point_count();
  r.counts["lines"] = G.line_count();
  r.counts["n"] = ng.n;
  r.counts["s"] = ng.s ? Json(*ng.s) : Json(nullptr);
  r.counts["t"] = ng.t ? Json(*ng.t) : Json(nullptr);
  r.counts["thick"] = ng.thick;
  r.counts["levi_girth"] = ls.girth;
  r.counts["levi_diameter"] = ls.diameter;
  r.counts["point_graph"] = regularity_json(check_metrically_regular(point_graph(G)));
  if (G.embedded() && ng.ok) {
    const EmbeddingParams e = check_embedding_axioms(G);
    Json emb = Json::object();
    Json ax = Json::object();
    for (const auto& [letter, ok] : e.axioms) ax[std::string(1, letter)] = ok;
    emb["axioms"] = std::move(ax);
    emb["failed_axiom"] = e.failed_axiom ? Json(std::string(1, *e.failed_axiom)) : Json(nullptr);
    if (e.failed_axiom) {
      emb["witness"] = e.witness;
    } else {
      emb["m"] = e.m;
      emb["h"] = e.h;
      emb["d"] = e.d;
      emb["e"] = std::vector<int>(e.e.begin() + std::min<std::size_t>(1, e.e.size()), e.e.end());
      emb["f"] = std::vector<int>(e.f.begin() + std::min<std::size_t>(1, e.f.size()), e.f.end());
      emb["identity_holds"] = e.identity_holds;
      emb["case"] = e.classification ? Json(to_string(e.classification->which)) : Json(nullptr);
    }
    r.counts["embedding"] = std::move(emb);
  }
  return r;
}

Report run_hexagon(const HexagonOptions& opt) {
  if (opt.stabilizer && opt.q != 2) throw GroupError("the stabilizer filtration is only available for q = 2");
  const HexagonModel M = build_split_cayley(opt.q);
  const int q = opt.q;
  const std::uint64_t expected = (ipow(q, 6) - 1) / (q - 1);
  Report r;
  r.command = "hexagon";
  r.parameters["q"] = q;
  r.parameters["verify"] = opt.verify;
  r.parameters["stabilizer"] = opt.stabilizer;
  r.expect("points", expected, M.geometry.point_count());
  r.expect("lines", expected, M.geometry.line_count());
  r.counts["points"] = M.geometry.point_count();
  r.counts["lines"] = M.geometry.line_count();
  r.counts["ef_lines"] = M.ef_lines;
  r.counts["u_orbit"] = M.u_orbit.size();
  if (opt.verify) {
    Json steps = Json::array();
    for (const StepVerdict& s : verify_construction_steps(M)) {
      auto& v = r.check("step" + std::to_string(s.step), s.ok, true, s.ok);
      if (!s.ok) v.witness = s.detail;
      Json j = Json::object();
      j["step"] = s.step;
      j["name"] = s.name;
      j["detail"] = s.detail;
      steps.push_back(std::move(j));
    }
    r.counts["steps"] = std::move(steps);
    const NgonResult ng = check_generalized_ngon(M.geometry);
    r.expect("generalized_hexagon", true, ng.ok && ng.n == 6);
    r.expect("order_s", q, ng.s ? Json(*ng.s) : Json(nullptr));
    r.expect("order_t", q, ng.t ? Json(*ng.t) : Json(nullptr));
    const LeviStats ls = levi_girth_diameter(M.geometry);
    r.expect("levi_girth", 12, ls.girth);
    r.expect("levi_diameter", 6, ls.diameter);
  }
  if (q % 2 == 0 && (opt.verify || opt.stabilizer)) {
    const SymplecticHexagon S = hexagon_in_sp6(M);
    r.expect("symplectic_lines_totally_isotropic", true, S.lines_totally_isotropic);
    r.expect("symplectic_w2_is_perp", true, S.w2_is_perp);
    if (opt.stabilizer) add_stabilizer_checks(r, S);
  }
  if (opt.export_path) save_geometry(*opt.export_path, M.geometry);
  return r;
}

Report run_group(const std::string& preset, const std::vector<std::string>& checks_in) {
  static const std::vector<std::string> known{"order", "rank", "antiflag", "line", "blocks", "chain"};
  std::vector<std::string> checks = checks_in.empty() ? std::vector<std::string>{"order", "antiflag"} : checks_in;
  for (const auto& c : checks) {
    if (std::find(known.begin(), known.end(), c) == known.end()) throw GroupError("unknown check: " + c);
  }
  const PresetGroup pg = preset_group(preset);
  const Group& G = pg.group;
  Report r;
  r.command = "group";
  r.parameters["preset"] = preset;
  r.parameters["checks"] = checks;
  r.counts["generators"] = G.generators().size();
  r.counts["dimension"] = G.dim();
  r.counts["field_order"] = G.field().order();
  const PointSet points = acting_points(pg);
  r.counts["domain"] = pg.space ? "polar points" : "projective points";
  r.counts["domain_size"] = points.size();
  auto has = [&](const char* c) { return std::find(checks.begin(), checks.end(), c) != checks.end(); };

  if (has("order")) {
    const auto order = group_order(G);
    r.counts["order"] = order ? Json(*order) : Json(nullptr);
    if (pg.known_order) r.expect("order", *pg.known_order, order ? Json(*order) : Json(nullptr));
  }
  if (has("rank")) {
    const RankResult rank = rank_of(G, act_on_points(G, points), 0);
    r.expect("transitive", true, rank.transitive);
    r.counts["rank"] = rank.rank;
    r.counts["subdegrees"] = rank.subdegrees;
  }
  if (has("antiflag") || has("line")) {
    const AntiflagResult af = antiflag_transitive(G, AntiflagMode::Linear);
    const LineCriterionResult lc = line_criterion_4_1(G);
    auto& v = r.expect("antiflag_equals_line_criterion", af.transitive, lc.passes);
    if (lc.failing_line) v.witness = to_json(*lc.failing_line);
    r.counts["antiflag_transitive"] = af.transitive;
    r.counts["antiflags"] = af.antiflags;
    r.counts["antiflag_orbits"] = af.orbit_sizes;
    r.counts["line_criterion"] = lc.passes;
    r.counts["point_transitive"] = lc.point_transitive;
    r.counts["line_orbits"] = lc.line_orbits;
    if (pg.space && pg.space->type() != PolarType::Unitary) {
      const AntiflagResult cl = antiflag_transitive(G, AntiflagMode::Classical, &*pg.space);
      r.counts["classical_antiflag_transitive"] = cl.transitive;
      r.counts["classical_antiflags"] = cl.antiflags;
      r.counts["classical_antiflag_orbits"] = cl.orbit_sizes;
    }
  }
  if (has("blocks")) {
    const BlockResult b = imprimitivity_blocks(act_on_points(G, points).perms, points.size(), &points);
    r.expect("transitive_on_points", true, b.transitive);
    r.counts["primitive"] = b.primitive;
    r.counts["block_size"] = b.block.size();
    r.counts["block_count"] = b.block_count;
    r.counts["block"] = b.block;
    r.counts["block_is_subspace"] = b.is_subspace ? Json(*b.is_subspace) : Json(nullptr);
  }
  if (has("chain")) {
    const InvariantChain ch = invariant_chain(G, points, 0, pg.space ? &*pg.space : nullptr);
    auto& v = r.expect("chain", true, ch.ok);
    if (!ch.ok) v.witness = ch.failure;
    r.counts["chain_dims"] = ch.dims;
    r.counts["chain_layer_sizes"] = [&] {
      std::vector<int> s;
      for (const auto& l : ch.layers) s.push_back(static_cast<int>(l.size()));
      return s;
    }();
    r.counts["chain_layers_are_orbits"] = ch.layers_are_orbits;
    r.counts["chain_full_subspaces"] = ch.full_subspaces;
    r.counts["chain_perp_relation"] = ch.perp_relation ? Json(*ch.perp_relation) : Json(nullptr);
    r.counts["chain_hyperplane_property"] =
        ch.hyperplane_property ? Json(*ch.hyperplane_property) : Json(nullptr);
  }
  return r;
}

Report run_rank3(long long k, long long l, long long lambda, long long mu) {
  Report r;
  r.command = "constraints rank3";
  r.parameters["k"] = k;
  r.parameters["l"] = l;
  r.parameters["lambda"] = lambda;
  r.parameters["mu"] = mu;
  const Rank3Params p = rank3_from_graph(k, l, lambda, mu);
  r.expect("lambda_identity", lambda, p.mu + p.r + p.s);
  r.counts["params"] = rank3_json(p);
  r.counts["printed_lambda_formula_holds"] = printed_lambda_formula_holds(p);
  return r;
}

Report run_rank4(long long k, long long l, long long lambda, long long mu, long long j, long long jt) {
  Report r;
  r.command = "constraints rank4";
  r.parameters["k"] = k;
  r.parameters["l"] = l;
  r.parameters["lambda"] = lambda;
  r.parameters["mu"] = mu;
  r.parameters["j"] = j;
  r.parameters["t"] = jt;
  const Rank3Params p = rank3_from_graph(k, l, lambda, mu);
  const Rank4Verdict v = rank4_feasible(p, j, jt);
  auto& verdict = r.expect("feasible", true, v.feasible);
  if (!v.feasible) verdict.witness = v.reason;
  r.counts["params"] = rank3_json(p);
  r.counts["rank4"] = rank4_json(v);
  return r;
}

std::string zsigmondy_expected_outcome(long long q, int k) {
  long long qk = 1;
  for (int i = 0; i < k && qk <= 64; ++i) qk *= q;
  if (qk == 64) return to_string(ZsigmondyOutcome::QK64);
  if (k == 2 && is_prime(q) && ((q + 1) & q) == 0) return to_string(ZsigmondyOutcome::MersenneK2);
  return to_string(ZsigmondyOutcome::Primitive);
}

Report run_zsigmondy(long long q, int k) {
  Report r;
  r.command = "constraints zsigmondy";
  r.parameters["q"] = q;
  r.parameters["k"] = k;
  const auto [p, e] = prime_power(static_cast<int>(q));
  const ZsigmondyResult z = zsigmondy(q, k);
  r.expect("outcome", zsigmondy_expected_outcome(q, k), to_string(z.outcome));
  r.counts["outcome"] = to_string(z.outcome);
  if (z.outcome == ZsigmondyOutcome::Primitive) {
    r.expect("prime_mod_ek", 1, z.prime % (static_cast<long long>(e) * k));
    r.counts["prime"] = z.prime;
  }
  return r;
}

Report run_section13(int m_lo, int m_hi, std::string* csv) {
  if (m_lo < 2 || m_hi < m_lo) throw ConstraintError("need 2 <= m-lo <= m-hi");
  Report r;
  r.command = "constraints section13";
  r.parameters["m_lo"] = m_lo;
  r.parameters["m_hi"] = m_hi;
  const auto rows = section13_eliminate(m_lo, m_hi);
  for (const auto& [q, h] : section13_pairs()) {
    Json survivors = Json::array();
    for (const auto& row : rows) {
      if (row.q == q && row.h == h && !row.eliminated()) survivors.push_back(row.m);
    }
    r.expect("pair_q" + std::to_string(q) + "_h" + std::to_string(h), Json::array(), survivors);
  }
  int direct_agree = 0;
  for (const auto& row : rows) {
    const bool minus_ok = !row.direct_minus || *row.direct_minus == row.divides_minus;
    const bool plus_ok = !row.direct_plus || *row.direct_plus == row.divides_plus;
    if (minus_ok && plus_ok) ++direct_agree;
  }
  r.expect("reduced_test_matches_direct", rows.size(), direct_agree);
  r.counts["rows"] = rows.size();
  if (csv) *csv = section13_csv(rows);
  return r;
}

Report run_case31(long long q, int m, int h, int f1, int e2) {
  Report r;
  r.command = "constraints case31";
  r.parameters["q"] = q;
  r.parameters["m"] = m;
  r.parameters["h"] = h;
  r.parameters["f1"] = f1;
  r.parameters["e2"] = e2;
  const Case31Result c = classify_31_case(q, m, h, f1, e2);
  r.expect("identity", true, c.identity_holds);
  auto& v = r.check("classified", c.which != Case31::Infeasible, "i|ii", to_string(c.which));
  if (c.which == Case31::Infeasible) v.witness = c.reason;
  r.counts["case"] = to_string(c.which);
  return r;
}

Report run_showcase(const std::string& name) {
  Report r;
  r.command = "showcase";
  r.parameters["name"] = name;
  if (name == "a9") {
    const A9Model A = build_a9();
    r.expect("singular_points", 135, A.space.points().size());
    r.expect("type_rank", 4, A.space.rank());
    r.expect("weight8_points", 9, A.weight8.size());
    r.expect("weight8_pairwise_nonperpendicular", true, A.pairwise_nonperpendicular);
    r.expect("generators_dickson0", true, A.generators_dickson0);
    r.expect("order", 181440, A.order ? Json(*A.order) : Json(nullptr));
    const A9SolidResult s = verify_a9_antiflag_via_solids(A);
    r.expect("solid_pairs", 8640, s.a9.ordered_pairs);
    r.expect("solid_pair_orbit", 8640, s.a9.orbit_size);
    r.expect("omega_baseline_orbit", 8640, s.omega_baseline.orbit_size);
    r.counts["family_size"] = s.a9.family_size;
    r.counts["disjoint_per_solid"] = s.a9.disjoint_per_solid;
    r.counts["pair_stabilizer"] = s.pair_stabilizer ? Json(*s.pair_stabilizer) : Json(nullptr);
  } else if (name == "omega7") {
    const Omega7Result o = verify_omega7_example();
    r.expect("nonsingular_points", 120, o.nonsingular_points);
    r.expect("nonsingular_transitive", true, o.nonsingular_transitive);
    r.expect("point_stabilizer_order", 1451520, o.v_stabilizer_order);
    r.expect("solid_pairs", 8640, o.pairs.ordered_pairs);
    r.expect("solid_pair_orbit", 8640, o.pairs.orbit_size);
    r.expect("pair_stabilizer_enumerated", 168, o.pair_stabilizer_order);
    r.expect("pair_stabilizer_from_orbit", 168,
             o.pairs.orbit_size == 0 ? Json(nullptr) : Json(o.v_stabilizer_order / o.pairs.orbit_size));
    r.expect("rank_on_family", 4, o.rank_on_family);
    r.expect("subdegrees", std::vector<int>{1, 14, 56, 64}, o.subdegrees);
    r.expect("jt_constant", true, o.jt_constant);
    auto& feas = r.expect("rank4_feasible", true, o.rank4.feasible);
    if (!o.rank4.feasible) feas.witness = o.rank4.reason;
    r.expect("families_preserved", true, o.families_preserved);
    r.expect("reflections_swap_families", true, o.reflections_swap);
    r.counts["v_isometries"] = o.v_isometries;
    r.counts["rank3"] = rank3_json(o.rank3);
    r.counts["j"] = o.j;
    r.counts["jt"] = o.jt;
    r.counts["rank4"] = rank4_json(o.rank4);
  } else if (name == "semilinear") {
    const GammaResult g = verify_gamma_examples();
    r.expect("sl2_4_antiflag_transitive", false, g.sl2_4.transitive);
    r.expect("sl2_4_antiflag_orbits", std::vector<std::uint64_t>{60, 60}, g.sl2_4.orbit_sizes);
    r.expect("sl2_4_sigma_antiflag_transitive", true, g.sl2_4_sigma.transitive);
    r.expect("sl2_4_sigma_order", 120, g.sigma_order ? Json(*g.sigma_order) : Json(nullptr));
    r.expect("sl2_4_sigma_regular", true, g.sigma_regular);
    r.expect("sl2_4_sigma_block_size", 3, g.sigma_blocks.block.size());
    r.expect("sl2_4_sigma_block_count", 5, g.sigma_blocks.block_count);
    r.expect("sl2_4_sigma_blocks_are_lines", true, g.sigma_blocks.is_subspace.value_or(false));
    r.expect("sl3_4_block_size", 3, g.sl3_4_blocks.block.size());
    r.counts["antiflags"] = g.sl2_4.antiflags;
    r.counts["sl3_4_block_count"] = g.sl3_4_blocks.block_count;
  } else {
    throw std::invalid_argument("unknown showcase: " + name);
  }
  return r;
}

}  // namespace geomforge::cli
