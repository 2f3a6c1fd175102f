// Serial reference vs OpenMP face kernels on hexagonal lattices of growing size.

#include <map>

#include <benchmark/benchmark.h>

#include "duniform/io.hpp"
#include "duniform/kernels.hpp"

using namespace duniform;

namespace {

struct Instance {
  Problem p;
  Label f;
};

const Instance& instance(int rings) {
  static std::map<int, Instance> cache;
  auto it = cache.find(rings);
  if (it == cache.end()) {
    Problem p = parse_problem(preset("ring_lattice", {rings, Scenario::Tangent}));
    Label f = p.f;
    it = cache.emplace(rings, Instance{std::move(p), std::move(f)}).first;
  }
  return it->second;
}

template <Execution E>
void BM_Faces(benchmark::State& state) {
  const Instance& in = instance(static_cast<int>(state.range(0)));
  std::vector<kernels::FaceGeometry> out;
  for (auto _ : state) {
    kernels::evaluate_faces(in.p.aug, in.p.cs, in.f, true, out, E);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(in.p.aug.num_faces()));
}

template <Execution E>
void BM_Curvature(benchmark::State& state) {
  const Instance& in = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(curvature(in.p.aug, in.p.cs, in.f, E));
}

}  // namespace

BENCHMARK(BM_Faces<Execution::Serial>)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_Faces<Execution::Parallel>)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_Curvature<Execution::Serial>)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_Curvature<Execution::Parallel>)->Arg(8)->Arg(32)->Arg(128);

BENCHMARK_MAIN();
