#include <gtest/gtest.h>

#include <random>
#include <set>

#include "geomforge/linear.hpp"

namespace gf = geomforge;

namespace {

gf::Vec vec(const gf::Field& F, std::initializer_list<int> c) {
  gf::Vec v(static_cast<int>(c.size()));
  int i = 0;
  for (int x : c) v[i++] = F.element(x);
  return v;
}

std::vector<gf::Subspace> all_subspaces(const gf::Field& F, int n) {
  std::vector<gf::Subspace> out{gf::Subspace(F, n)};
  for (int k = 1; k <= n; ++k) {
    for (auto& s : gf::enumerate_subspaces(F, n, k)) out.push_back(s);
  }
  return out;
}

gf::Matrix random_matrix(const gf::Field& F, int rows, int cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> coord(0, F.order() - 1);
  gf::Matrix m;
  for (int r = 0; r < rows; ++r) {
    gf::Vec v(cols);
    for (int c = 0; c < cols; ++c) v[c] = F.element(coord(rng));
    m.push_back(v);
  }
  return m;
}

}  // namespace

TEST(Linear, RankOfSmallMatrices) {
  const gf::Field F2 = gf::Field::of_order(2);
  EXPECT_EQ(gf::rank(F2, gf::identity(F2, 3)), 3);
  EXPECT_EQ(gf::rref(F2, 3, gf::identity(F2, 3)), gf::Subspace::full(F2, 3));
  const gf::Matrix dependent{vec(F2, {1, 1, 0}), vec(F2, {0, 1, 1}), vec(F2, {1, 0, 1})};
  EXPECT_EQ(gf::rank(F2, dependent), 2);
}

TEST(Linear, RrefIsIdempotentOnRandomMatrices) {
  std::mt19937 rng(7);
  const gf::Field F3 = gf::Field::of_order(3);
  for (int trial = 0; trial < 200; ++trial) {
    const gf::Matrix m = random_matrix(F3, 4, 6, rng);
    const gf::Subspace s = gf::rref(F3, 6, m);
    EXPECT_EQ(gf::rref(F3, 6, s.basis()), s);
    EXPECT_EQ(s.dim(), gf::rank(F3, m));
  }
}

TEST(Linear, RrefIsCanonicalForAnySpanningSet) {
  std::mt19937 rng(11);
  for (int q : {2, 4, 5, 8, 9}) {
    const gf::Field F = gf::Field::of_order(q);
    std::uniform_int_distribution<int> coord(1, q - 1);
    for (int trial = 0; trial < 100; ++trial) {
      const gf::Subspace s = gf::rref(F, 5, random_matrix(F, 3, 5, rng));
      // Shuffle, rescale and pad the basis with combinations of itself.
      gf::Matrix other = s.basis();
      gf::Vec combo(5);
      for (const gf::Vec& b : s.basis()) combo = gf::axpy(F, combo, F.element(coord(rng)), b);
      other.push_back(combo);
      std::shuffle(other.begin(), other.end(), rng);
      for (auto& v : other) v = gf::scale(F, F.element(coord(rng)), v);
      const gf::Subspace t = gf::rref(F, 5, other);
      EXPECT_EQ(t, s);
      EXPECT_EQ(t.key(), s.key());
    }
  }
}

TEST(Linear, SumAndIntersectionBasics) {
  const gf::Field F2 = gf::Field::of_order(2);
  const gf::Subspace a = gf::Subspace::span(F2, 4, {vec(F2, {1, 0, 0, 0}), vec(F2, {0, 1, 1, 0})});
  EXPECT_EQ(gf::intersect(a, a), a);
  EXPECT_EQ(gf::sum(a, a), a);
  const gf::Subspace p = gf::Subspace::point(F2, vec(F2, {1, 0, 0, 1}));
  const gf::Subspace r = gf::Subspace::point(F2, vec(F2, {0, 0, 1, 1}));
  const gf::Subspace line = gf::sum(p, r);
  EXPECT_EQ(line.dim(), 2);
  EXPECT_EQ(line.point_count(), 3u);
}

TEST(Linear, ModularLawExhaustiveOverGf2To4) {
  const gf::Field F2 = gf::Field::of_order(2);
  const auto subs = all_subspaces(F2, 4);
  ASSERT_EQ(subs.size(), 67u);
  for (const auto& a : subs) {
    for (const auto& b : subs) {
      ASSERT_EQ(gf::sum(a, b).dim() + gf::intersect(a, b).dim(), a.dim() + b.dim());
    }
  }
}

TEST(Linear, PointCounts) {
  EXPECT_EQ(gf::enumerate_points(gf::Subspace::full(gf::Field::of_order(2), 3)).size(), 7u);
  EXPECT_EQ(gf::enumerate_points(gf::Subspace::full(gf::Field::of_order(4), 2)).size(), 5u);
  EXPECT_EQ(gf::enumerate_points(gf::Subspace::full(gf::Field::of_order(2), 4)).size(), 15u);
  EXPECT_EQ(gf::Subspace::full(gf::Field::of_order(3), 4).point_count(), 40u);
}

TEST(Linear, EnumeratedPointsAreNormalizedAndSorted) {
  const gf::Field F = gf::Field::of_order(5);
  const auto pts = gf::enumerate_points(gf::Subspace::full(F, 3));
  ASSERT_EQ(pts.size(), 31u);
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
  for (const auto& v : pts) EXPECT_EQ(gf::normalize(F, v), v);
}

TEST(Linear, SubspaceCountsAreGaussianBinomials) {
  const gf::Field F3 = gf::Field::of_order(3);
  EXPECT_EQ(gf::enumerate_subspaces(F3, 4, 2).size(), 130u);
  EXPECT_EQ(gf::hyperplanes(F3, 4).size(), 40u);
}

TEST(Linear, Antiflags) {
  EXPECT_EQ(gf::antiflags(gf::Field::of_order(2), 4).size(), 120u);
  EXPECT_EQ(gf::antiflags(gf::Field::of_order(2), 3).size(), 28u);
  // n = 2: each point misses q "hyperplanes" (the other points).
  EXPECT_EQ(gf::antiflags(gf::Field::of_order(3), 2).size(), 4u * 3u);
}

TEST(Linear, InverseAndNullSpace) {
  std::mt19937 rng(3);
  const gf::Field F = gf::Field::of_order(7);
  int invertible = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const gf::Matrix m = random_matrix(F, 4, 4, rng);
    if (gf::rank(F, m) < 4) continue;
    ++invertible;
    EXPECT_EQ(gf::mul(F, m, gf::inverse(F, m)), gf::identity(F, 4));
  }
  EXPECT_GT(invertible, 0);
  const gf::Matrix rows = random_matrix(F, 2, 5, rng);
  const gf::Subspace ns = gf::null_space(F, 5, rows);
  EXPECT_EQ(ns.dim(), 5 - gf::rank(F, rows));
  for (const gf::Vec& b : ns.basis()) {
    for (const gf::Vec& r : rows) EXPECT_EQ(gf::dot(F, r, b), F.zero());
  }
}

TEST(Linear, VecKeyRoundTrip) {
  const gf::Field F = gf::Field::of_order(9);
  std::set<std::uint64_t> keys;
  for (const gf::Vec& v : gf::enumerate_points(gf::Subspace::full(F, 3))) {
    const auto key = gf::vec_key(F, v);
    EXPECT_TRUE(keys.insert(key).second);
    EXPECT_EQ(gf::vec_from_key(F, 3, key), v);
  }
}

TEST(Linear, PointSetLookup) {
  const gf::Field F = gf::Field::of_order(3);
  const gf::PointSet P = gf::PointSet::projective_space(F, 3);
  ASSERT_EQ(P.size(), 13);
  for (int i = 0; i < P.size(); ++i) {
    EXPECT_EQ(P.find(P[i]), i);
    EXPECT_EQ(P.find(gf::scale(F, F.element(2), P[i])), i);
  }
  const gf::Subspace line = gf::Subspace::span(F, 3, {P[0], P[1]});
  EXPECT_EQ(P.ids_in(line).size(), 4u);
}

TEST(Linear, DimensionChecks) {
  const gf::Field F = gf::Field::of_order(2);
  EXPECT_THROW(gf::Vec(gf::kMaxDim + 1), gf::DimensionError);
  EXPECT_THROW(gf::add(F, gf::Vec(3), gf::Vec(4)), gf::DimensionError);
}
