#include <gtest/gtest.h>

#include "geomforge/showcase.hpp"

namespace gf = geomforge;

namespace {

const gf::A9Model& a9() {
  static const gf::A9Model m = gf::build_a9();
  return m;
}

const gf::Omega7Result& omega7() {
  static const gf::Omega7Result r = gf::verify_omega7_example();
  return r;
}

}  // namespace

TEST(ShowcaseA9, QuadricAndWeightEightVectors) {
  const auto& A = a9();
  EXPECT_EQ(A.space.type(), gf::PolarType::OrthogonalPlus);
  EXPECT_EQ(A.space.points().size(), 135);
  EXPECT_EQ(A.space.rank(), 4);
  EXPECT_EQ(A.weight8.size(), 9u);
  EXPECT_TRUE(A.pairwise_nonperpendicular);
  EXPECT_TRUE(A.generators_dickson0);
  ASSERT_TRUE(A.order.has_value());
  EXPECT_EQ(*A.order, 181440u);
}

TEST(ShowcaseA9, TransitiveOnDisjointSolidPairs) {
  const auto s = gf::verify_a9_antiflag_via_solids(a9());
  EXPECT_EQ(s.a9.family_size, 135);
  EXPECT_EQ(s.a9.disjoint_per_solid, 64);
  EXPECT_EQ(s.a9.ordered_pairs, 8640u);
  EXPECT_EQ(s.a9.orbit_size, 8640u);
  EXPECT_TRUE(s.a9.transitive);
  EXPECT_EQ(s.omega_baseline.orbit_size, 8640u);
  ASSERT_TRUE(s.pair_stabilizer.has_value());
  EXPECT_EQ(*s.pair_stabilizer, 21u);
}

TEST(ShowcaseOmega7, NonsingularPointStabilizer) {
  const auto& o = omega7();
  EXPECT_EQ(o.nonsingular_points, 120);
  EXPECT_TRUE(o.nonsingular_transitive);
  EXPECT_EQ(o.v_isometries, 2903040u);
  EXPECT_EQ(o.v_stabilizer_order, 1451520u);
  EXPECT_TRUE(o.families_preserved);
  EXPECT_TRUE(o.reflections_swap);
}

TEST(ShowcaseOmega7, SolidPairsAndPairStabilizer) {
  const auto& o = omega7();
  EXPECT_EQ(o.pairs.ordered_pairs, 8640u);
  EXPECT_EQ(o.pairs.orbit_size, 8640u);
  EXPECT_EQ(o.pair_stabilizer_order, 168u);
  EXPECT_EQ(o.v_stabilizer_order / o.pairs.orbit_size, o.pair_stabilizer_order);
}

TEST(ShowcaseOmega7, RankFourOnFamily) {
  const auto& o = omega7();
  EXPECT_EQ(o.rank_on_family, 4);
  EXPECT_EQ(o.subdegrees, (std::vector<int>{1, 14, 56, 64}));
  EXPECT_EQ(o.rank3.k, 64);
  EXPECT_EQ(o.rank3.l, 70);
  EXPECT_EQ(o.rank3.lambda, 28);
  EXPECT_EQ(o.rank3.mu, 32);
  EXPECT_EQ(o.j, 14);
  EXPECT_EQ(o.jt, 8);
  EXPECT_TRUE(o.jt_constant);
  EXPECT_TRUE(o.rank4.feasible);
  EXPECT_EQ(o.rank4.passing_side, "s");
}

TEST(ShowcaseSemilinear, FrobeniusMakesAntiflagTransitive) {
  const auto g = gf::verify_gamma_examples();
  EXPECT_FALSE(g.sl2_4.transitive);
  EXPECT_EQ(g.sl2_4.antiflags, 120u);
  EXPECT_EQ(g.sl2_4.orbit_sizes, (std::vector<std::uint64_t>{60, 60}));
  EXPECT_TRUE(g.sl2_4_sigma.transitive);
  ASSERT_TRUE(g.sigma_order.has_value());
  EXPECT_EQ(*g.sigma_order, 120u);
  EXPECT_TRUE(g.sigma_regular);
  EXPECT_EQ(g.sigma_blocks.block.size(), 3u);
  EXPECT_EQ(g.sigma_blocks.block_count, 5);
  EXPECT_EQ(g.sigma_blocks.is_subspace, true);
  EXPECT_EQ(g.sl3_4_blocks.block.size(), 3u);
  EXPECT_EQ(g.sl3_4_blocks.block_count, 21);
}
