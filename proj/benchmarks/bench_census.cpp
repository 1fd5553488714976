// Microbenchmarks for the hot paths of the census sweeps.
#include <benchmark/benchmark.h>

#include "verocensus/lineclass.hpp"
#include "verocensus/systems.hpp"

using namespace vrc;

namespace {

const FieldCtx& f9() {
  static const FieldCtx f(3, 2);
  return f;
}

const FieldCtx& f4() {
  static const FieldCtx f(2, 2);
  return f;
}

void BM_FieldMul(benchmark::State& state) {
  const FieldCtx& f = f9();
  Fel x = 1;
  for (auto _ : state) {
    x = f.mul(x, 5);
    x = f.add(x, 3);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul);

void BM_ClassifyPoint(benchmark::State& state) {
  const FieldCtx& f = f9();
  const auto pts = enumerate_points(5, f);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_point(pts[i], f));
    i = (i + 1) % pts.size();
  }
}
BENCHMARK(BM_ClassifyPoint);

void BM_ClassifyConic(benchmark::State& state) {
  const FieldCtx& f = f9();
  const auto pts = enumerate_points(5, f);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_conic(point_to_form(pts[i]), f));
    i = (i + 1) % pts.size();
  }
}
BENCHMARK(BM_ClassifyConic);

void BM_ClassifyLine(benchmark::State& state) {
  const FieldCtx& f = f4();
  const auto lines = enumerate_lines(whole_space(5, f), f);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_line(lines[i], f));
    i = (i + 1) % lines.size();
  }
}
BENCHMARK(BM_ClassifyLine);

void BM_Od4OfLine(benchmark::State& state) {
  const FieldCtx& f = f4();
  const RepParams rp = find_rep_params(f);
  const Subspace rep = representative_line(LineOrbit::o17, rp, f);
  for (auto _ : state) benchmark::DoNotOptimize(od4_of_line(rep, f));
}
BENCHMARK(BM_Od4OfLine);

void BM_PointOd(benchmark::State& state) {
  const FieldCtx& f = f9();
  const RepParams rp = find_rep_params(f);
  const Subspace rep = representative_line(LineOrbit::o14_1, rp, f);
  for (auto _ : state) benchmark::DoNotOptimize(point_od(rep, f));
}
BENCHMARK(BM_PointOd);

}  // namespace

BENCHMARK_MAIN();
