#include <benchmark/benchmark.h>

#include "trophull/cyclic.hpp"
#include "trophull/ideal.hpp"
#include "trophull/resolution.hpp"
#include "trophull/tropical.hpp"
#include "trophull/type_geometry.hpp"

namespace {

using namespace trop;

void bm_trop_det(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  WeightMatrix m(k, k);
  unsigned long long seed = 88172645463325252ull;
  auto next = [&seed]() {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return static_cast<long long>(seed % 10007);
  };
  for (Rat& e : m.entries) e = next();
  for (auto _ : state) {
    benchmark::DoNotOptimize(trop_det(m).multiplicity);
  }
}
BENCHMARK(bm_trop_det)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

void bm_enumerate_vertices(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const WeightMatrix v = cyclic_points(r, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_vertices(v).size());
  }
}
BENCHMARK(bm_enumerate_vertices)->Args({4, 4})->Args({6, 6})->Args({8, 5});

void bm_face_poset(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const WeightMatrix v = cyclic_points(r, n);
  const auto vertices = enumerate_vertices(v);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_face_poset(vertices, v).by_dim.size());
  }
}
BENCHMARK(bm_face_poset)->Args({4, 4})->Args({5, 5});

void bm_boundary_matrices(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const WeightMatrix v = cyclic_points(r, n);
  const FacePoset poset = build_face_poset(enumerate_vertices(v), v);
  for (auto _ : state) {
    benchmark::DoNotOptimize(boundary_matrices(poset).size());
  }
}
BENCHMARK(bm_boundary_matrices)->Args({4, 4})->Args({5, 5});

void bm_initial_ideal(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const WeightMatrix v = cyclic_points(r, n);
  const auto vertices = enumerate_vertices(v);
  for (auto _ : state) {
    benchmark::DoNotOptimize(initial_ideal(v, vertices).generators.size());
  }
}
BENCHMARK(bm_initial_ideal)->Args({4, 4})->Args({5, 5})->Args({6, 6});

}  // namespace

BENCHMARK_MAIN();
