#include <gtest/gtest.h>

#include "geomforge/constraints.hpp"
#include "geomforge/field.hpp"
#include "geomforge/polar.hpp"

namespace gf = geomforge;

namespace {

/// (k, l, lambda, mu) of the perpendicularity graph on the points of a polar space.
std::array<long long, 4> perp_graph_parameters(const gf::PolarSpace& P) {
  const auto& pts = P.points();
  const int n = pts.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) adj[a][b] = a != b && P.perpendicular(pts[a], pts[b]);
  }
  long long k = 0;
  for (int b = 0; b < n; ++b) k += adj[0][b];
  long long lambda = -1;
  long long mu = -1;
  for (int b = 1; b < n; ++b) {
    long long common = 0;
    for (int c = 0; c < n; ++c) common += adj[0][c] && adj[b][c];
    (adj[0][b] ? lambda : mu) = common;
  }
  return {k, n - 1 - k, lambda, mu};
}

long long ipow(long long b, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

}  // namespace

TEST(Constraints, SymplecticPerpGraph) {
  const auto [k, l, lambda, mu] = perp_graph_parameters(gf::PolarSpace::standard(gf::PolarType::Symplectic, 6, 2));
  EXPECT_EQ(k, 30);
  EXPECT_EQ(l, 32);
  EXPECT_EQ(lambda, 13);
  EXPECT_EQ(mu, 15);
  const auto p = gf::rank3_from_graph(k, l, lambda, mu);
  EXPECT_EQ(p.r, 3);
  EXPECT_EQ(p.s, -5);
  EXPECT_EQ(p.mu, p.k + p.r * p.s);
  EXPECT_EQ(p.lambda, p.mu + p.r + p.s);
  EXPECT_FALSE(gf::printed_lambda_formula_holds(p));
}

TEST(Constraints, Rank3Errors) {
  // Complete multipartite K_{3,3,3}: mu = k.
  EXPECT_THROW(gf::rank3_from_graph(6, 2, 3, 6), gf::ConstraintError);
  // k(k - lambda - 1) != l mu.
  EXPECT_THROW(gf::rank3_from_graph(10, 5, 3, 4), gf::ConstraintError);
}

TEST(Constraints, Rank3PropertiesOnPolarGraphs) {
  for (auto [t, n, q] : std::vector<std::tuple<gf::PolarType, int, int>>{{gf::PolarType::Symplectic, 4, 2},
                                                                        {gf::PolarType::Symplectic, 6, 2},
                                                                        {gf::PolarType::OrthogonalPlus, 6, 2},
                                                                        {gf::PolarType::OrthogonalMinus, 6, 2},
                                                                        {gf::PolarType::Symplectic, 4, 3},
                                                                        {gf::PolarType::OrthogonalPlus, 8, 2},
                                                                        {gf::PolarType::OrthogonalMinus, 6, 3},
                                                                        {gf::PolarType::OrthogonalOdd, 5, 3}}) {
    const auto [k, l, lambda, mu] = perp_graph_parameters(gf::PolarSpace::standard(t, n, q));
    const auto p = gf::rank3_from_graph(k, l, lambda, mu);
    EXPECT_GT(p.r, p.s);
    EXPECT_EQ(p.k * (p.k - p.lambda - 1), p.l * p.mu);
    EXPECT_EQ(p.mu, p.k + p.r * p.s);
    EXPECT_EQ(p.lambda - p.mu, p.r + p.s);
  }
}

TEST(Constraints, Rank4SymplecticDataFailsDivisibility) {
  const auto p = gf::rank3_from_graph(30, 32, 13, 15);
  const auto v = gf::rank4_feasible(p, 16, 6);
  EXPECT_FALSE(v.feasible);
  ASSERT_EQ(v.sides.size(), 2u);
  EXPECT_EQ(v.sides[0].split, "r");
  EXPECT_EQ(v.sides[0].failed, gf::Rank4Condition::KlDivides);
}

TEST(Constraints, Rank4Precondition) {
  const auto p = gf::rank3_from_graph(30, 32, 13, 15);
  const auto v = gf::rank4_feasible(p, 32, 0);
  EXPECT_FALSE(v.feasible);
  EXPECT_EQ(v.sides[0].failed, gf::Rank4Condition::Precondition);
}

TEST(Constraints, Rank4SolidFamilyDataIsFeasible) {
  const auto p = gf::rank3_from_graph(64, 70, 28, 32);
  EXPECT_EQ(p.r, 4);
  EXPECT_EQ(p.s, -8);
  const auto v = gf::rank4_feasible(p, 14, 8);
  EXPECT_TRUE(v.feasible);
  EXPECT_EQ(v.passing_side, "s");
  EXPECT_EQ(v.sides[0].failed, gf::Rank4Condition::Split);
}

TEST(Constraints, Section13Oracles) {
  const auto first = gf::section13_eliminate(3, 3, {{2, 1}});
  ASSERT_EQ(first.size(), 1u);
  EXPECT_EQ(first[0].rhs, 1);
  EXPECT_EQ(first[0].minus_term, 3);
  EXPECT_EQ(first[0].plus_term, 5);
  EXPECT_TRUE(first[0].eliminated());
  const auto nine = gf::section13_eliminate(3, 3, {{9, 3}});
  EXPECT_EQ(nine[0].rhs, 144);
  EXPECT_EQ(nine[0].minus_term, 80);
  EXPECT_EQ(nine[0].plus_term, 82);
  EXPECT_TRUE(nine[0].eliminated());
}

TEST(Constraints, Section13TableEmpty) {
  EXPECT_EQ(gf::section13_pairs().size(), 5u);
  const auto rows = gf::section13_eliminate(3, 20);
  EXPECT_EQ(rows.size(), 5u * 18u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.eliminated()) << "q=" << r.q << " h=" << r.h << " m=" << r.m;
    if (r.direct_minus) {
      EXPECT_EQ(*r.direct_minus, r.divides_minus);
    }
    if (r.direct_plus) {
      EXPECT_EQ(*r.direct_plus, r.divides_plus);
    }
  }
  const std::string csv = gf::section13_csv(rows);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 91);
}

TEST(Constraints, ZsigmondyOracles) {
  EXPECT_EQ(gf::zsigmondy(2, 6).outcome, gf::ZsigmondyOutcome::QK64);
  EXPECT_EQ(gf::zsigmondy(7, 2).outcome, gf::ZsigmondyOutcome::MersenneK2);
  const auto z = gf::zsigmondy(2, 4);
  EXPECT_EQ(z.outcome, gf::ZsigmondyOutcome::Primitive);
  EXPECT_EQ(z.prime, 5);
  EXPECT_EQ(gf::to_string(gf::ZsigmondyOutcome::QK64), "q_k_64");
}

TEST(Constraints, ZsigmondyExceptionsOverSmallGrid) {
  for (long long q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto [p, e] = gf::prime_power(static_cast<int>(q));
    for (int k = 2; k <= 12; ++k) {
      const auto z = gf::zsigmondy(q, k);
      const bool q_k_64 = ipow(q, k) == 64;
      const bool mersenne = k == 2 && gf::is_prime(q) && ((q + 1) & q) == 0;
      if (q_k_64) {
        EXPECT_EQ(z.outcome, gf::ZsigmondyOutcome::QK64) << q << "," << k;
      } else if (mersenne) {
        EXPECT_EQ(z.outcome, gf::ZsigmondyOutcome::MersenneK2) << q << "," << k;
      } else {
        ASSERT_EQ(z.outcome, gf::ZsigmondyOutcome::Primitive) << q << "," << k;
        EXPECT_EQ((ipow(q, k) - 1) % z.prime, 0);
        for (int i = 1; i < e * k; ++i) EXPECT_NE((ipow(p, i) - 1) % z.prime, 0) << q << "," << k;
        EXPECT_EQ(z.prime % (e * k), 1) << q << "," << k;
      }
    }
  }
}

TEST(Constraints, PrimeFactors) {
  EXPECT_EQ(gf::prime_factors(360), (std::vector<long long>{2, 3, 5}));
  EXPECT_EQ(gf::prime_factors(97), (std::vector<long long>{97}));
  EXPECT_TRUE(gf::prime_factors(1).empty());
}

TEST(Constraints, Case31Classification) {
  const auto sym = gf::classify_31_case(2, 5, 6, 4, 4);
  EXPECT_TRUE(sym.identity_holds);
  EXPECT_EQ(sym.which, gf::Case31::CaseI);
  for (long long q : {2, 3, 4}) {
    const auto hex = gf::classify_31_case(q, 3, 5, 2, 1);
    EXPECT_TRUE(hex.identity_holds);
    EXPECT_EQ(hex.which, gf::Case31::CaseII);
  }
  const auto bad = gf::classify_31_case(2, 4, 7, 3, 1);
  EXPECT_TRUE(bad.identity_holds);
  EXPECT_EQ(bad.which, gf::Case31::Infeasible);
}
