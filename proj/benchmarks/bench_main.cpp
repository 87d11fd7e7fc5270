#include <benchmark/benchmark.h>

#include <random>

#include "geomforge/field.hpp"
#include "geomforge/group.hpp"
#include "geomforge/hexagon.hpp"
#include "geomforge/incidence.hpp"
#include "geomforge/linear.hpp"
#include "geomforge/polar.hpp"
#include "geomforge/presets.hpp"

namespace gf = geomforge;

namespace {

gf::Matrix random_matrix(const gf::Field& F, int rows, int cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, F.order() - 1);
  gf::Matrix m;
  for (int i = 0; i < rows; ++i) {
    gf::Vec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = gf::Fe{static_cast<std::uint8_t>(d(rng))};
    m.push_back(v);
  }
  return m;
}

void BM_FieldMul(benchmark::State& state) {
  const gf::Field F = gf::Field::of_order(static_cast<int>(state.range(0)));
  const int q = F.order();
  for (auto _ : state) {
    unsigned acc = 0;
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        acc += F.mul(gf::Fe{static_cast<std::uint8_t>(a)}, gf::Fe{static_cast<std::uint8_t>(b)}).value;
      }
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * q * q);
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(9)->Arg(64)->Arg(81);

void BM_Rref(benchmark::State& state) {
  const gf::Field F = gf::Field::of_order(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  std::mt19937 rng(12345);
  std::vector<gf::Matrix> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_matrix(F, n / 2, n, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gf::rref(F, n, inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_Rref)->Args({2, 8})->Args({3, 8})->Args({4, 16});

void BM_PolarPoints(benchmark::State& state) {
  const auto type = static_cast<gf::PolarType>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gf::PolarSpace::standard(type, 8, 2).points().size());
  }
}
BENCHMARK(BM_PolarPoints)
    ->Arg(static_cast<int>(gf::PolarType::Symplectic))
    ->Arg(static_cast<int>(gf::PolarType::OrthogonalPlus));

void BM_TotallySingularPlanes(benchmark::State& state) {
  const gf::PolarSpace P = gf::PolarSpace::standard(gf::PolarType::Symplectic, 6, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(P.totally_singular(3).size());
}
BENCHMARK(BM_TotallySingularPlanes)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SplitCayleyHexagon(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gf::build_split_cayley(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SplitCayleyHexagon)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_LeviGirthDiameter(benchmark::State& state) {
  const auto M = gf::build_split_cayley(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gf::levi_girth_diameter(M.geometry));
}
BENCHMARK(BM_LeviGirthDiameter)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_PointOrbit(benchmark::State& state) {
  const gf::PresetGroup pg = gf::preset_group("Sp(6,2)");
  const gf::Action act = gf::act_on_points(pg.group, pg.space->points());
  for (auto _ : state) benchmark::DoNotOptimize(gf::orbit(act.perms, act.degree, 0));
}
BENCHMARK(BM_PointOrbit);

void BM_GroupOrder(benchmark::State& state) {
  const gf::PresetGroup pg = gf::preset_group("Sp(6,2)");
  for (auto _ : state) benchmark::DoNotOptimize(gf::group_order(pg.group));
}
BENCHMARK(BM_GroupOrder)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
