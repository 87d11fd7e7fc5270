#include <gtest/gtest.h>

#include "geomforge/polar.hpp"

namespace gf = geomforge;
using gf::PolarType;

namespace {

gf::Vec vec(const gf::Field& F, std::initializer_list<int> c) {
  gf::Vec v(static_cast<int>(c.size()));
  int i = 0;
  for (int x : c) v[i++] = F.element(x);
  return v;
}

std::uint64_t ipow(std::uint64_t b, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

/// Raw count of isotropic projective points, independent of PolarSpace.
std::uint64_t raw_isotropic_count(const gf::Form& form) {
  std::uint64_t n = 0;
  gf::for_each_point(gf::Subspace::full(form.field(), form.dim()), [&](const gf::Vec& v) {
    if (form.is_isotropic(v)) ++n;
  });
  return n;
}

}  // namespace

TEST(Polar, StandardSpaceOracles) {
  const auto sp = gf::PolarSpace::standard(PolarType::Symplectic, 6, 2);
  EXPECT_EQ(sp.points().size(), 63);
  EXPECT_EQ(sp.rank(), 3);
  EXPECT_EQ(sp.type_constant_twice(), 0);
  const auto op = gf::PolarSpace::standard(PolarType::OrthogonalPlus, 8, 2);
  EXPECT_EQ(op.points().size(), 135);
  EXPECT_EQ(op.rank(), 4);
  EXPECT_EQ(op.type_constant_twice(), -2);
  const auto om = gf::PolarSpace::standard(PolarType::OrthogonalMinus, 8, 2);
  EXPECT_EQ(om.points().size(), 119);
  EXPECT_EQ(om.rank(), 3);
  EXPECT_EQ(om.type_constant_twice(), 2);
}

TEST(Polar, PointCountsMatchClosedForms) {
  struct Case {
    PolarType type;
    int n;
    int q;
  };
  const std::vector<Case> cases{
      {PolarType::Symplectic, 4, 2},      {PolarType::Symplectic, 6, 3},    {PolarType::Symplectic, 4, 4},
      {PolarType::OrthogonalPlus, 6, 3},  {PolarType::OrthogonalPlus, 8, 2}, {PolarType::OrthogonalOdd, 5, 3},
      {PolarType::OrthogonalOdd, 7, 3},   {PolarType::OrthogonalOdd, 5, 5},  {PolarType::OrthogonalMinus, 6, 3},
      {PolarType::OrthogonalMinus, 6, 4}, {PolarType::Unitary, 3, 2},       {PolarType::Unitary, 4, 2},
      {PolarType::Unitary, 4, 3},         {PolarType::Unitary, 5, 2},       {PolarType::Unitary, 3, 4},
  };
  for (const auto& c : cases) {
    const auto P = gf::PolarSpace::standard(c.type, c.n, c.q);
    const std::string name = gf::to_string(c.type) + "(" + std::to_string(c.n) + "," + std::to_string(c.q) + ")";
    EXPECT_EQ(static_cast<std::uint64_t>(P.points().size()), gf::expected_point_count(c.type, c.n, c.q)) << name;
    EXPECT_EQ(static_cast<std::uint64_t>(P.points().size()), raw_isotropic_count(P.form())) << name;
    EXPECT_EQ(P.rank(), gf::expected_rank(c.type, c.n)) << name;
    EXPECT_EQ(P.witness_maximal().dim(), P.rank()) << name;
    EXPECT_TRUE(P.is_singular(P.witness_maximal())) << name;
  }
  // Closed forms written out for the non-unitary types.
  const int q = 3;
  const int r = 2;
  EXPECT_EQ(gf::expected_point_count(PolarType::Symplectic, 2 * r, q), (ipow(q, 2 * r) - 1) / (q - 1));
  EXPECT_EQ(gf::expected_point_count(PolarType::OrthogonalPlus, 2 * r, q),
            (ipow(q, r - 1) + 1) * (ipow(q, r) - 1) / (q - 1));
  EXPECT_EQ(gf::expected_point_count(PolarType::OrthogonalMinus, 2 * r + 2, q),
            (ipow(q, r + 1) + 1) * (ipow(q, r) - 1) / (q - 1));
  EXPECT_EQ(gf::expected_point_count(PolarType::OrthogonalOdd, 2 * r + 1, q), (ipow(q, 2 * r) - 1) / (q - 1));
}

TEST(Polar, PerpBasics) {
  const auto sp = gf::PolarSpace::standard(PolarType::Symplectic, 6, 2);
  const gf::Field& F = sp.field();
  EXPECT_EQ(sp.perp(gf::Subspace(F, 6)), gf::Subspace::full(F, 6));
  for (const gf::Vec& x : sp.points().points()) EXPECT_EQ(sp.perp(gf::Subspace::point(F, x)).dim(), 5);
}

TEST(Polar, DoublePerpExhaustiveOnSp43) {
  const auto P = gf::PolarSpace::standard(PolarType::Symplectic, 4, 3);
  const gf::Field& F = P.field();
  int tested = 0;
  for (int k = 0; k <= 4; ++k) {
    const auto subs = k == 0 ? std::vector<gf::Subspace>{gf::Subspace(F, 4)} : gf::enumerate_subspaces(F, 4, k);
    for (const auto& s : subs) {
      const gf::Subspace p = P.perp(s);
      EXPECT_EQ(p.dim(), 4 - s.dim());
      EXPECT_EQ(P.perp(p), s);
      ++tested;
    }
  }
  EXPECT_EQ(tested, 212);
}

TEST(Polar, SingularSubspaces) {
  const auto P = gf::PolarSpace::standard(PolarType::OrthogonalPlus, 4, 2);
  const gf::Field& F = P.field();
  EXPECT_TRUE(P.is_singular(gf::Subspace(F, 4)));
  EXPECT_TRUE(P.is_singular(gf::Subspace::point(F, vec(F, {1, 0, 1, 0}))));
  EXPECT_FALSE(P.is_singular(gf::Subspace::point(F, vec(F, {1, 1, 0, 0}))));
  // Two reguli of q + 1 lines each.
  EXPECT_EQ(P.totally_singular(2).size(), 6u);
}

TEST(Polar, MaximalSubspaceCounts) {
  const auto op = gf::PolarSpace::standard(PolarType::OrthogonalPlus, 8, 2);
  const auto solids = op.max_ts_subspaces();
  EXPECT_EQ(solids.size(), 270u);
  for (const auto& s : solids) EXPECT_EQ(s.dim(), 4);
  EXPECT_EQ(gf::PolarSpace::standard(PolarType::Symplectic, 4, 2).totally_singular(2).size(), 15u);
  // 135 = (q^3 + 1)(q^2 + 1)(q + 1) t.i. planes of Sp(6, 2).
  EXPECT_EQ(gf::PolarSpace::standard(PolarType::Symplectic, 6, 2).totally_singular(3).size(), 135u);
}

TEST(Polar, ExtendToMaximal) {
  const auto P = gf::PolarSpace::standard(PolarType::OrthogonalMinus, 8, 3);
  for (int i = 0; i < P.points().size(); i += 97) {
    const gf::Subspace s = gf::Subspace::point(P.field(), P.points()[i]);
    const gf::Subspace m = P.extend_to_maximal(s);
    EXPECT_TRUE(m.contains(s));
    EXPECT_EQ(m.dim(), P.rank());
    EXPECT_TRUE(P.is_singular(m));
  }
}

TEST(Polar, SolidFamilies) {
  const auto op8 = gf::PolarSpace::standard(PolarType::OrthogonalPlus, 8, 2);
  const auto fam8 = gf::solid_families(op8);
  EXPECT_EQ(fam8.family_a.size(), 135u);
  EXPECT_EQ(fam8.family_b.size(), 135u);
  int disjoint = 0;
  for (const auto& s : fam8.family_a) disjoint += gf::intersect(s, fam8.family_a[0]).dim() == 0 ? 1 : 0;
  EXPECT_EQ(disjoint, 64);
  const auto fam6 = gf::solid_families(gf::PolarSpace::standard(PolarType::OrthogonalPlus, 6, 2));
  EXPECT_EQ(fam6.family_a.size(), 15u);
  EXPECT_EQ(fam6.family_b.size(), 15u);
  EXPECT_THROW(gf::solid_families(gf::PolarSpace::standard(PolarType::Symplectic, 4, 2)), gf::PolarError);
}

TEST(Polar, PerpDifferenceOracles) {
  EXPECT_EQ(gf::verify_9_2(gf::PolarSpace::standard(PolarType::Symplectic, 6, 2), 1).first_count, 32u);
  EXPECT_EQ(gf::verify_9_2(gf::PolarSpace::standard(PolarType::OrthogonalPlus, 6, 2), 1).first_count, 16u);
  EXPECT_EQ(gf::verify_9_2(gf::PolarSpace::standard(PolarType::OrthogonalMinus, 6, 2), 1).first_count, 16u);
}

TEST(Polar, PerpDifferenceAllTypes) {
  for (PolarType t : {PolarType::Symplectic, PolarType::OrthogonalPlus, PolarType::OrthogonalOdd,
                      PolarType::OrthogonalMinus}) {
    for (int q : {2, 3, 4}) {
      const int n = t == PolarType::OrthogonalOdd ? 5 : (t == PolarType::OrthogonalMinus ? 6 : 4);
      const auto P = gf::PolarSpace::standard(t, n, q);
      for (int i = 1; i <= P.rank(); ++i) {
        const auto v = gf::verify_9_2(P, i, 6);
        EXPECT_TRUE(v.passed) << gf::to_string(t) << " q=" << q << " i=" << i;
        EXPECT_GT(v.chains_tested, 0);
      }
    }
  }
  EXPECT_THROW(gf::verify_9_2(gf::PolarSpace::standard(PolarType::Symplectic, 4, 2), 3), gf::PolarError);
}

TEST(Polar, SymplecticOrthogonalBijection) {
  const auto b32 = gf::sp_o_bijection(2, 3);
  EXPECT_EQ(b32.orthogonal.points().size(), 63);
  EXPECT_EQ(b32.symplectic.points().size(), 63);
  EXPECT_TRUE(b32.bijective);
  EXPECT_TRUE(b32.lines_correspond);
  EXPECT_EQ(b32.orthogonal_lines, b32.symplectic_lines);
  const auto b24 = gf::sp_o_bijection(4, 2);
  EXPECT_EQ(b24.orthogonal.points().size(), 85);
  EXPECT_EQ(b24.symplectic.points().size(), 85);
  EXPECT_TRUE(b24.bijective && b24.lines_correspond);
  EXPECT_THROW(gf::sp_o_bijection(3, 2), gf::PolarError);
}

TEST(Polar, HyperplaneSectionsRecoverTheirPole) {
  const auto P = gf::PolarSpace::standard(PolarType::OrthogonalPlus, 6, 2);
  const gf::Field& F = P.field();
  int nonsingular = 0;
  for (const gf::Vec& v : gf::enumerate_points(gf::Subspace::full(F, 6))) {
    if (P.form().quadratic(v).value == 0) continue;
    ++nonsingular;
    const auto res = gf::theorem_10_3_check(P, P.points().ids_in(P.perp(gf::Subspace::point(F, v))));
    ASSERT_EQ(res.status, gf::Theorem103Status::Recovered);
    EXPECT_EQ(gf::normalize(F, *res.v), gf::normalize(F, v));
  }
  EXPECT_EQ(nonsingular, 28);
  std::vector<int> all_but_one;
  for (int i = 1; i < P.points().size(); ++i) all_but_one.push_back(i);
  const auto bad = gf::theorem_10_3_check(P, all_but_one);
  EXPECT_EQ(bad.status, gf::Theorem103Status::HypothesisViolated);
  EXPECT_TRUE(bad.witness_solid.has_value());
}

TEST(Polar, GridHypothesisSets) {
  for (int q : {2, 3, 4}) {
    const auto g = gf::rank2_hypothesis_sets(q);
    std::uint64_t fact = 1;
    for (int i = 2; i <= q + 1; ++i) fact *= i;
    EXPECT_EQ(g.hypothesis_sets, fact) << "q=" << q;
    EXPECT_EQ(g.conics, static_cast<std::uint64_t>((q + 1) * q * (q - 1))) << "q=" << q;
  }
}

TEST(Polar, ParseTypeNames) {
  EXPECT_EQ(gf::parse_polar_type("Sp"), PolarType::Symplectic);
  EXPECT_EQ(gf::parse_polar_type("O+"), PolarType::OrthogonalPlus);
  EXPECT_EQ(gf::parse_polar_type("O-"), PolarType::OrthogonalMinus);
  EXPECT_EQ(gf::parse_polar_type("O"), PolarType::OrthogonalOdd);
  EXPECT_EQ(gf::parse_polar_type("U"), PolarType::Unitary);
  EXPECT_THROW(gf::parse_polar_type("Q"), gf::PolarError);
}

TEST(Polar, RejectsInvalidShapes) {
  EXPECT_THROW(gf::PolarSpace::standard(PolarType::Symplectic, 5, 2), gf::PolarError);
  EXPECT_THROW(gf::PolarSpace::standard(PolarType::OrthogonalOdd, 6, 3), gf::PolarError);
}
