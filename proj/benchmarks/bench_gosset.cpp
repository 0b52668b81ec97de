#include <benchmark/benchmark.h>

#include "gosset/circle_operator.hpp"
#include "gosset/coxeter_plane.hpp"
#include "gosset/spectrum.hpp"

using namespace gosset;

namespace {

struct Prepared {
  roots::RootSystem rs;
  roots::HighestRootData hr;
  roots::KillingData kd;
};

Prepared prepare(const roots::LieType& t) {
  Prepared p{roots::build_root_system(t), {}, {}};
  p.hr = roots::highest_root(p.rs);
  p.kd = roots::killing_gram(p.rs, p.hr);
  return p;
}

const apposition::StructureConstants& e8_constants() {
  static auto sc = [] {
    auto p = prepare({'E', 8});
    return apposition::build_structure_constants(p.rs, p.hr, p.kd);
  }();
  return sc;
}

}  // namespace

static void BM_BuildRootSystem_E8(benchmark::State& state) {
  for (auto _ : state) {
    auto rs = roots::build_root_system({'E', 8});
    benchmark::DoNotOptimize(rs.roots.size());
  }
}
BENCHMARK(BM_BuildRootSystem_E8);

static void BM_RadiiReport_E8(benchmark::State& state) {
  auto p = prepare({'E', 8});
  auto op = radii::build_circle_operator(p.rs, p.hr, p.kd);
  for (auto _ : state) {
    auto rr = radii::radii_report(op);
    benchmark::DoNotOptimize(rr.radii.back());
  }
}
BENCHMARK(BM_RadiiReport_E8);

static void BM_CharPoly_E8(benchmark::State& state) {
  auto p = prepare({'E', 8});
  auto op = radii::build_circle_operator(p.rs, p.hr, p.kd);
  for (auto _ : state) {
    auto cp = radii::char_poly(op);
    benchmark::DoNotOptimize(cp.integral);
  }
}
BENCHMARK(BM_CharPoly_E8);

static void BM_StructureConstants_E8(benchmark::State& state) {
  auto p = prepare({'E', 8});
  for (auto _ : state) {
    auto sc = apposition::build_structure_constants(p.rs, p.hr, p.kd);
    benchmark::DoNotOptimize(sc.dim);
  }
}
BENCHMARK(BM_StructureConstants_E8)->Unit(benchmark::kMillisecond);

static void BM_Spectrum_E8(benchmark::State& state) {
  const auto& sc = e8_constants();
  auto ce = apposition::build_cyclic_element(sc);
  for (auto _ : state) {
    auto sr = apposition::spectrum(sc, ce);
    benchmark::DoNotOptimize(sr.kernel_dim);
  }
}
BENCHMARK(BM_Spectrum_E8)->Unit(benchmark::kMillisecond);

static void BM_Figure_E8(benchmark::State& state) {
  const auto& sc = e8_constants();
  auto ce = apposition::build_cyclic_element(sc);
  auto sr = apposition::spectrum(sc, ce);
  for (auto _ : state) {
    auto fig = coxplane::make_figure(sc, sr, {});
    benchmark::DoNotOptimize(fig.points.size());
  }
}
BENCHMARK(BM_Figure_E8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
