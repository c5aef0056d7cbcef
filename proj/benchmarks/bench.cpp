#include <benchmark/benchmark.h>

#include "tiltcov/covering.hpp"
#include "tiltcov/endo.hpp"
#include "tiltcov/io.hpp"
#include "tiltcov/tilting.hpp"

using namespace tiltcov;

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "fixtures"
#endif

namespace {

AlgebraPtr fixture(const char* name) {
  return io::parse_algebra(
      io::read_file(std::string(FIXTURE_DIR) + "/" + name + ".alg.json"));
}

void bm_rank(benchmark::State& state) {
  Field q;
  long n = state.range(0);
  Mat m(q, n, n);
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) m.at(r, c) = Scalar::ratio((r * c + r + 1) % 7 - 3, c + 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(bm_rank)->Arg(8)->Arg(16)->Arg(32);

void bm_basis(benchmark::State& state) {
  auto a = fixture("apr4");
  for (auto _ : state) {
    auto rebuilt = build_presentation(a->name, a->quiver, a->relations);
    benchmark::DoNotOptimize(rebuilt->dim());
  }
}
BENCHMARK(bm_basis);

void bm_hom_basis(benchmark::State& state) {
  auto a = fixture("cycle3");
  Representation r = regular(a);
  for (auto _ : state) benchmark::DoNotOptimize(hom_basis(r, r).size());
}
BENCHMARK(bm_hom_basis);

void bm_decompose(benchmark::State& state) {
  auto a = fixture("apr4");
  Representation r = regular(a);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(r, 7).size());
}
BENCHMARK(bm_decompose);

void bm_hasse(benchmark::State& state) {
  auto a = fixture("tri3");
  for (auto _ : state) {
    auto d = hasse_diagram(regular_candidate(a), 64, default_pd_cap(a), 0);
    benchmark::DoNotOptimize(d.vertices.size());
  }
}
BENCHMARK(bm_hasse);

void bm_endo(benchmark::State& state) {
  auto a = fixture("tri3");
  auto t = apr_tilt(a, 2);
  for (auto _ : state) {
    auto b = endo_presentation(t);
    benchmark::DoNotOptimize(b.algebra->dim());
  }
}
BENCHMARK(bm_endo);

void bm_covering(benchmark::State& state) {
  auto a = fixture("apr4");
  FiniteGroup z2{{2}};
  Grading w;
  w.weights.assign(4, z2.zero());
  w.weights[2] = {1};
  for (auto _ : state) {
    auto cd = build_covering(a, w, z2);
    benchmark::DoNotOptimize(cd.cover->dim());
  }
}
BENCHMARK(bm_covering);

}  // namespace

BENCHMARK_MAIN();
