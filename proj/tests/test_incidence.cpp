#include <gtest/gtest.h>

#include "geomforge/hexagon.hpp"
#include "geomforge/incidence.hpp"
#include "geomforge/parallel.hpp"
#include "geomforge/polar.hpp"

namespace gf = geomforge;

namespace {

gf::IncidenceGeometry fano() {
  return gf::IncidenceGeometry(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

/// Points and totally isotropic lines of a polar space, embedded.
gf::IncidenceGeometry polar_geometry(const gf::PolarSpace& P) {
  std::vector<std::vector<int>> lines;
  for (const auto& l : P.totally_singular(2)) lines.push_back(P.points().ids_in(l));
  return gf::IncidenceGeometry(P.field(), P.points().points(), std::move(lines));
}

gf::Graph complete_graph(int n) {
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) adj[i].push_back(j);
    }
  }
  return gf::Graph(std::move(adj));
}

}  // namespace

TEST(Incidence, RejectsMalformedGeometries) {
  EXPECT_THROW(gf::IncidenceGeometry(3, {{0, 3}}), gf::GeometryError);
  EXPECT_THROW(gf::IncidenceGeometry(3, {{0, 0, 1}}), gf::GeometryError);
  EXPECT_THROW(gf::IncidenceGeometry(4, {{0, 1, 2}, {0, 1, 3}}), gf::GeometryError);
}

TEST(Incidence, SingleLineGivesTriangle) {
  const gf::IncidenceGeometry G(3, {{0, 1, 2}});
  const gf::Graph g = gf::point_graph(G);
  for (int v = 0; v < 3; ++v) EXPECT_EQ(g.neighbours(v).size(), 2u);
  EXPECT_EQ(g.diameter(), 1);
}

TEST(Incidence, CollinearityGraphs) {
  const auto gq = polar_geometry(gf::PolarSpace::standard(gf::PolarType::Symplectic, 4, 2));
  const gf::Graph g = gf::point_graph(gq);
  EXPECT_EQ(g.diameter(), 2);
  for (int v = 0; v < g.size(); ++v) EXPECT_EQ(g.neighbours(v).size(), 6u);

  const gf::HexagonModel hex = gf::build_split_cayley(2);
  const gf::Graph h = gf::point_graph(hex.geometry);
  EXPECT_EQ(h.diameter(), 3);
  for (int v = 0; v < h.size(); ++v) EXPECT_EQ(h.neighbours(v).size(), 6u);
}

TEST(Incidence, MetricRegularity) {
  const auto complete = gf::check_metrically_regular(complete_graph(5));
  ASSERT_TRUE(complete.regular);
  EXPECT_EQ(complete.profile->diameter, 1);

  const gf::Graph path({{1}, {0, 2}, {1, 3}, {2}});
  const auto p = gf::check_metrically_regular(path);
  EXPECT_FALSE(p.regular);
  EXPECT_TRUE(p.witness.has_value());

  const gf::HexagonModel hex = gf::build_split_cayley(2);
  const auto h = gf::check_metrically_regular(gf::point_graph(hex.geometry));
  ASSERT_TRUE(h.regular);
  EXPECT_EQ(h.profile->sizes, (std::vector<std::uint64_t>{1, 6, 24, 32}));
}

TEST(Incidence, GeneralizedPolygons) {
  const auto f = gf::check_generalized_ngon(fano());
  EXPECT_TRUE(f.ok);
  EXPECT_EQ(f.n, 3);
  EXPECT_EQ(f.s, 2);
  EXPECT_EQ(f.t, 2);

  const auto gq = gf::check_generalized_ngon(polar_geometry(gf::PolarSpace::standard(gf::PolarType::Symplectic, 4, 2)));
  EXPECT_TRUE(gq.ok);
  EXPECT_EQ(gq.n, 4);
  EXPECT_EQ(gq.s, 2);
  EXPECT_EQ(gq.t, 2);

  const auto hex = gf::check_generalized_ngon(gf::build_split_cayley(2).geometry);
  EXPECT_TRUE(hex.ok);
  EXPECT_EQ(hex.n, 6);
  EXPECT_EQ(hex.s, 2);
  EXPECT_EQ(hex.t, 2);
  EXPECT_TRUE(hex.feit_higman);
}

TEST(Incidence, ThinPolygonsNeedTheFlag) {
  // Ordinary hexagon: six points, six two-point lines in a cycle.
  const gf::IncidenceGeometry cycle(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  EXPECT_FALSE(gf::check_generalized_ngon(cycle).ok);
  const auto thin = gf::check_generalized_ngon(cycle, true);
  EXPECT_TRUE(thin.ok);
  EXPECT_EQ(thin.n, 6);
  EXPECT_FALSE(thin.thick);
}

TEST(Incidence, NonPolygonHasWitness) {
  // Two lines sharing a point: Levi graph is a tree, diameter 4 but girth 0.
  const gf::IncidenceGeometry G(5, {{0, 1, 2}, {0, 3, 4}});
  const auto r = gf::check_generalized_ngon(G, true);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.reason.empty());
}

TEST(Incidence, LeviStatsAgreeWithPolygonCheck) {
  std::vector<gf::IncidenceGeometry> fixtures{
      fano(), polar_geometry(gf::PolarSpace::standard(gf::PolarType::Symplectic, 4, 2)),
      polar_geometry(gf::PolarSpace::standard(gf::PolarType::Symplectic, 4, 3)),
      polar_geometry(gf::PolarSpace::standard(gf::PolarType::OrthogonalMinus, 6, 2)),
      gf::build_split_cayley(2).geometry, gf::build_split_cayley(3).geometry};
  for (const auto& G : fixtures) {
    const auto ng = gf::check_generalized_ngon(G);
    ASSERT_TRUE(ng.ok);
    const auto ls = gf::levi_girth_diameter(G);
    EXPECT_EQ(ls.girth, 2 * ng.n);
    EXPECT_EQ(ls.diameter, ng.n);
  }
}

TEST(Incidence, PointCountsMatchPolygonFormulas) {
  // Generalized quadrangle: (s+1)(st+1); hexagon: (s+1)(s^2t^2+st+1).
  const auto gq = polar_geometry(gf::PolarSpace::standard(gf::PolarType::OrthogonalMinus, 6, 2));
  const auto r = gf::check_generalized_ngon(gq);
  ASSERT_TRUE(r.ok && r.n == 4);
  EXPECT_EQ(gq.point_count(), (*r.s + 1) * (*r.s * *r.t + 1));
  const auto hex = gf::build_split_cayley(3).geometry;
  const auto h = gf::check_generalized_ngon(hex);
  ASSERT_TRUE(h.ok && h.n == 6);
  const int s = *h.s;
  const int t = *h.t;
  EXPECT_EQ(hex.point_count(), (s + 1) * (s * s * t * t + s * t + 1));
}

TEST(Incidence, FeitHigmanGate) {
  EXPECT_TRUE(gf::feit_higman_allows(3, 2, 2));
  EXPECT_TRUE(gf::feit_higman_allows(6, 2, 2));
  EXPECT_TRUE(gf::feit_higman_allows(8, 2, 4));
  EXPECT_FALSE(gf::feit_higman_allows(8, 2, 2));
  EXPECT_FALSE(gf::feit_higman_allows(5, 2, 2));
}

TEST(Incidence, EmbeddingCaseOne) {
  const auto G = polar_geometry(gf::PolarSpace::standard(gf::PolarType::Symplectic, 6, 2));
  const auto e = gf::check_embedding_axioms(G);
  ASSERT_FALSE(e.failed_axiom.has_value()) << e.witness;
  ASSERT_TRUE(e.classification.has_value());
  EXPECT_EQ(e.classification->which, gf::Case31::CaseI);
  EXPECT_TRUE(e.identity_holds);
  EXPECT_TRUE(e.w1_polarity);
}

TEST(Incidence, EmbeddingCaseTwo) {
  const auto S = gf::hexagon_in_sp6(gf::build_split_cayley(2));
  const auto e = gf::check_embedding_axioms(S.geometry);
  ASSERT_FALSE(e.failed_axiom.has_value()) << e.witness;
  ASSERT_TRUE(e.classification.has_value());
  EXPECT_EQ(e.classification->which, gf::Case31::CaseII);
  EXPECT_EQ(e.m, 3);
  EXPECT_TRUE(e.w2_hyperplanes);
}

TEST(Incidence, EmbeddingRejectsShortLines) {
  const gf::Field F = gf::Field::of_order(2);
  std::vector<gf::Vec> pts;
  for (const auto& v : gf::enumerate_points(gf::Subspace::full(F, 3))) pts.push_back(v);
  // Lines of two points only: not full projective lines.
  const gf::IncidenceGeometry G(F, pts, {{0, 1}, {2, 3}, {4, 5}});
  const auto e = gf::check_embedding_axioms(G);
  ASSERT_TRUE(e.failed_axiom.has_value());
  EXPECT_EQ(*e.failed_axiom, 'b');
}

TEST(Incidence, DistancesIndependentOfThreadCount) {
  const auto G = gf::build_split_cayley(3).geometry;
  gf::set_thread_count(1);
  const gf::Graph a = gf::levi_graph(G);
  gf::set_thread_count(4);
  const gf::Graph b = gf::levi_graph(G);
  gf::set_thread_count(1);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(a.diameter(), b.diameter());
  for (int i = 0; i < a.size(); i += 7) {
    for (int j = 0; j < a.size(); ++j) ASSERT_EQ(a.distance(i, j), b.distance(i, j));
  }
}

TEST(Incidence, DistanceBalls) {
  const auto hex = gf::build_split_cayley(2);
  const gf::Graph g = gf::point_graph(hex.geometry);
  const auto balls = gf::distance_balls(g, 0);
  ASSERT_GE(balls.size(), 3u);
  EXPECT_EQ(balls[0].size(), 1u);
  EXPECT_EQ(balls[1].size(), 7u);
  EXPECT_EQ(balls[2].size(), 31u);
}
