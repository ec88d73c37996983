#include <benchmark/benchmark.h>

#include "hopf4d/analysis.hpp"
#include "hopf4d/hopf.hpp"
#include "hopf4d/projection.hpp"
#include "hopf4d/scene.hpp"
#include "hopf4d/surfaces.hpp"

namespace {

hopf4d::Polyline3 stereo_fiber(double phi, double psi, std::size_t n) {
  const hopf4d::Polyline4 fiber = hopf4d::sample_fiber({phi, psi}, n);
  hopf4d::Polyline3 out;
  out.closed = true;
  for (const auto& p : fiber.vertices) out.vertices.push_back(hopf4d::stereographic_point(hopf4d::translate_to_view(p)));
  return out;
}

void BM_SampleFiber(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hopf4d::sample_fiber({0.3, 1.2}, n));
  }
}
BENCHMARK(BM_SampleFiber)->Arg(128)->Arg(1024);

void BM_TorusKappa(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hopf4d::torus_kappa(hopf4d::kPi / 2.0));
  }
}
BENCHMARK(BM_TorusKappa);

void BM_TorusStereo(benchmark::State& state) {
  const auto surface = hopf4d::torus_kappa(hopf4d::kPi / 3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hopf4d::torus_stereo(surface));
  }
}
BENCHMARK(BM_TorusStereo);

void BM_LinkingNumber(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = stereo_fiber(0.3, 1.2, n);
  const auto b = stereo_fiber(2.1, 0.9, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hopf4d::linking_number(a, b));
  }
}
BENCHMARK(BM_LinkingNumber)->Arg(64)->Arg(256);

void BM_WriteNestedScene(benchmark::State& state) {
  const auto doc = hopf4d::build_scene(hopf4d::NestedRequest{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(hopf4d::write_scene(doc));
  }
}
BENCHMARK(BM_WriteNestedScene)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
