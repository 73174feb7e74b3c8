#include <benchmark/benchmark.h>

#include "orbisect/euler.hpp"
#include "orbisect/models.hpp"
#include "orbisect/sectors.hpp"

namespace {

using namespace orbisect;

void BM_SectorsFootballZ(benchmark::State& state) {
  auto m = football_model();
  for (auto _ : state) {
    auto d = gamma_sectors(m.space, presentation::integers());
    benchmark::DoNotOptimize(d.refined.size());
  }
}
BENCHMARK(BM_SectorsFootballZ);

void BM_SectorsFootballZ2(benchmark::State& state) {
  auto m = football_model();
  auto p = presentation::free_abelian(2);
  for (auto _ : state) {
    auto d = gamma_sectors(m.space, p);
    benchmark::DoNotOptimize(d.refined.size());
  }
}
BENCHMARK(BM_SectorsFootballZ2);

void BM_SectorsS3F2(benchmark::State& state) {
  auto m = s3_cone_model();
  auto p = presentation::free_group(2);
  for (auto _ : state) {
    auto d = gamma_sectors(m.space, p);
    benchmark::DoNotOptimize(d.refined.size());
  }
}
BENCHMARK(BM_SectorsS3F2);

void BM_HomEnumerationF3A4(benchmark::State& state) {
  auto g = FiniteGroup::from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
  auto p = presentation::free_group(3);
  for (auto _ : state) {
    auto homs = enumerate_homs(p, g);
    benchmark::DoNotOptimize(homs.size());
  }
}
BENCHMARK(BM_HomEnumerationF3A4);

void BM_BarycentricSubdivision(benchmark::State& state) {
  auto m = football_model();
  for (auto _ : state) {
    auto sd = barycentric_subdivide(m.space);
    benchmark::DoNotOptimize(sd.complex.simplices.size());
  }
}
BENCHMARK(BM_BarycentricSubdivision);

void BM_ClassEquivalenceFootball(benchmark::State& state) {
  auto m = football_model();
  auto p = presentation::free_abelian(2);
  for (auto _ : state) {
    auto cert = verify_class_equivalence(m.space, p);
    benchmark::DoNotOptimize(cert.ok);
  }
}
BENCHMARK(BM_ClassEquivalenceFootball);

}  // namespace

BENCHMARK_MAIN();
