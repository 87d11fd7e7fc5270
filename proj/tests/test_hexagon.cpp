#include <gtest/gtest.h>

#include "geomforge/hexagon.hpp"
#include "geomforge/semilinear.hpp"

namespace gf = geomforge;

namespace {

int hexagon_points(int q) { return (q * q * q * q * q * q - 1) / (q - 1); }

const gf::HexagonModel& model(int q) {
  static const gf::HexagonModel m2 = gf::build_split_cayley(2);
  static const gf::HexagonModel m3 = gf::build_split_cayley(3);
  return q == 2 ? m2 : m3;
}

const gf::HexagonStabilizer& stabilizer_q2() {
  static const gf::SymplecticHexagon S = gf::hexagon_in_sp6(model(2));
  static const gf::HexagonStabilizer st = gf::hexagon_stabilizer_q2(S);
  return st;
}

}  // namespace

TEST(Hexagon, CountsForSmallFields) {
  for (int q : {2, 3}) {
    const auto& M = model(q);
    EXPECT_EQ(M.geometry.point_count(), hexagon_points(q)) << "q=" << q;
    EXPECT_EQ(M.geometry.line_count(), hexagon_points(q)) << "q=" << q;
    for (int x = 0; x < M.geometry.point_count(); ++x) {
      ASSERT_EQ(static_cast<int>(M.geometry.lines_through(x).size()), q + 1);
    }
    for (const auto& line : M.geometry.lines()) ASSERT_EQ(static_cast<int>(line.size()), q + 1);
  }
}

TEST(Hexagon, QuadricModel) {
  const auto& M = model(2);
  EXPECT_EQ(M.space.type(), gf::PolarType::OrthogonalOdd);
  EXPECT_EQ(M.space.points().size(), 63);
  EXPECT_TRUE(M.space.form().is_isotropic(M.u));
  EXPECT_EQ(M.w_u.dim(), 3);
  EXPECT_TRUE(M.space.is_singular(M.w_u));
  EXPECT_TRUE(M.w_u.contains(M.u));
  for (const auto& g : M.k_group.generators()) EXPECT_TRUE(gf::preserves_exactly(M.space.form(), g));
}

TEST(Hexagon, TransversalAndPlaneTransport) {
  const auto& M = model(3);
  ASSERT_EQ(M.transversal.size(), M.u_orbit.size());
  ASSERT_EQ(M.w_orbit.size(), M.u_orbit.size());
  const gf::Field& F = M.space.field();
  for (std::size_t i = 0; i < M.u_orbit.size(); ++i) {
    const gf::Vec image = gf::apply_point(F, M.transversal[i], M.u);
    EXPECT_EQ(M.space.points().find(image), M.u_orbit[i]);
    EXPECT_EQ(gf::apply(M.transversal[i], M.w_u), M.w_orbit[i]);
  }
}

TEST(Hexagon, ConstructionStepsPass) {
  for (int q : {2, 3}) {
    const auto steps = gf::verify_construction_steps(model(q));
    ASSERT_EQ(steps.size(), 8u);
    for (const auto& s : steps) EXPECT_TRUE(s.ok) << "q=" << q << " step " << s.step << ": " << s.detail;
  }
}

TEST(Hexagon, GeneralizedHexagonWithGirth12) {
  const auto r = gf::check_generalized_ngon(model(2).geometry);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.n, 6);
  EXPECT_EQ(r.s, 2);
  EXPECT_EQ(r.t, 2);
  EXPECT_EQ(gf::levi_girth_diameter(model(2).geometry).girth, 12);
}

TEST(Hexagon, SecondBallHas31Points) {
  const auto& G = model(2).geometry;
  const gf::Graph g = gf::point_graph(G);
  for (int x = 0; x < G.point_count(); ++x) EXPECT_EQ(gf::distance_balls(g, x)[2].size(), 31u);
}

TEST(Hexagon, FieldOfOrderFour) {
  const auto M = gf::build_split_cayley(4);
  EXPECT_EQ(M.geometry.point_count(), 1365);
  EXPECT_EQ(M.geometry.line_count(), 1365);
  const auto S = gf::hexagon_in_sp6(M);
  EXPECT_TRUE(S.lines_totally_isotropic);
  EXPECT_TRUE(S.w2_is_perp);
  EXPECT_EQ(S.w2_hyperplanes, 1365);
}

TEST(Hexagon, RejectsLargeFields) {
  EXPECT_ANY_THROW(gf::build_split_cayley(5));
  EXPECT_THROW(gf::hexagon_in_sp6(model(3)), gf::PolarError);
}

TEST(Hexagon, SymplecticTransport) {
  const auto S = gf::hexagon_in_sp6(model(2));
  EXPECT_EQ(S.space.type(), gf::PolarType::Symplectic);
  EXPECT_EQ(S.geometry.point_count(), 63);
  EXPECT_TRUE(S.lines_totally_isotropic);
  EXPECT_TRUE(S.w2_is_perp);
  EXPECT_EQ(S.w2_hyperplanes, 63);
}

TEST(Hexagon, StabilizerOrderByFiltration) {
  const auto& st = stabilizer_q2();
  EXPECT_EQ(st.symplectic_isometries, 1451520u);
  EXPECT_EQ(st.order, 12096u);
  EXPECT_EQ(gf::group_order(st.group), 12096u);
}

TEST(Hexagon, OrderedHexagonsFormOneRegularOrbit) {
  static const gf::SymplecticHexagon S = gf::hexagon_in_sp6(model(2));
  const auto hexes = gf::ordered_hexagons(S.geometry);
  EXPECT_EQ(hexes.size(), 12096u);
  const auto act = gf::act_on_points(stabilizer_q2().group, S.space.points());
  EXPECT_EQ(gf::tuple_orbit_size(act.perms, hexes[0]), 12096u);
  const auto r = gf::rank_of(stabilizer_q2().group, act, 0);
  EXPECT_EQ(r.subdegrees, (std::vector<int>{1, 6, 24, 32}));
}

TEST(Hexagon, OrbitSplitsOnSymplecticSubspaces) {
  static const gf::SymplecticHexagon S = gf::hexagon_in_sp6(model(2));
  const auto lines = gf::orbit_split(stabilizer_q2().group, S.space.totally_singular(2));
  EXPECT_EQ(lines.total, 315);
  EXPECT_EQ(lines.sizes, (std::vector<int>{252, 63}));
  const auto planes = gf::orbit_split(stabilizer_q2().group, S.space.totally_singular(3));
  EXPECT_EQ(planes.total, 135);
  EXPECT_EQ(planes.sizes, (std::vector<int>{72, 63}));
}

TEST(Hexagon, StabilizerChainAndAntiflags) {
  static const gf::SymplecticHexagon S = gf::hexagon_in_sp6(model(2));
  const auto& G = stabilizer_q2().group;
  const auto ch = gf::invariant_chain(G, S.space.points(), 0, &S.space);
  ASSERT_TRUE(ch.ok) << ch.failure;
  EXPECT_EQ(ch.dims, (std::vector<int>{1, 3, 5, 6}));
  EXPECT_EQ(ch.spaces[2], S.space.perp(gf::Subspace::point(S.space.field(), S.space.points()[0])));
  EXPECT_TRUE(gf::antiflag_transitive(G, gf::AntiflagMode::Linear).transitive);
  EXPECT_TRUE(gf::line_criterion_4_1(G).passes);
}
