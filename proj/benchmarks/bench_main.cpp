#include <benchmark/benchmark.h>

#include "slgap/groups/subgroups.hpp"
#include "slgap/growth/growth.hpp"
#include "slgap/rng.hpp"
#include "slgap/spectral/spectrum.hpp"
#include "slgap/walks/measure.hpp"

using namespace slgap;

namespace {

algebra::RingPtr ring_mod(std::uint64_t q) {
  return algebra::make_residue_ring(algebra::NumberField::make({0, 1}), q);
}

groups::TablePtr table_mod(std::uint64_t q) {
  return groups::GroupTable::from_spec(
      groups::GroupSpec::make(ring_mod(q), 2), 500000);
}

std::vector<std::uint32_t> unipotent(const groups::TablePtr& t,
                                     const algebra::RingPtr& r) {
  std::vector<std::uint32_t> S;
  for (auto m : {std::vector<long long>{1, 1, 0, 1}, {1, -1, 0, 1},
                 {1, 0, 1, 1}, {1, 0, -1, 1}})
    S.push_back(t->index_of(groups::GroupElem::from_ints(r, 2, m)));
  return S;
}

}  // namespace

static void BM_RingMul(benchmark::State& state) {
  auto R = ring_mod(15);
  auto K2 = algebra::NumberField::make({1, 0, 1});
  auto Rq = algebra::make_residue_ring(K2, static_cast<std::uint64_t>(state.range(0)));
  auto a = Rq->from_coeffs({3, 7});
  auto b = Rq->from_coeffs({11, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(Rq->mul(a, b));
  }
}
BENCHMARK(BM_RingMul)->Arg(15)->Arg(35);

static void BM_EnumerateGroup(benchmark::State& state) {
  auto p = static_cast<std::uint64_t>(state.range(0));
  auto spec = groups::GroupSpec::make(ring_mod(p), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(groups::enumerate_group(spec, 500000));
  }
}
BENCHMARK(BM_EnumerateGroup)->Arg(5)->Arg(13)->Arg(29)->Unit(benchmark::kMillisecond);

static void BM_Closure(benchmark::State& state) {
  auto p = static_cast<std::uint64_t>(state.range(0));
  auto r = ring_mod(p);
  auto A = groups::GroupElem::from_ints(r, 2, {1, 1, 0, 1});
  auto B = groups::GroupElem::from_ints(r, 2, {1, 0, 1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(groups::closure({A, B}));
  }
}
BENCHMARK(BM_Closure)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_WalkStep(benchmark::State& state) {
  auto p = static_cast<std::uint64_t>(state.range(0));
  auto r = ring_mod(p);
  auto t = table_mod(p);
  auto S = unipotent(t, r);
  unsigned k = 8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(walks::walk_power(t, S, k));
  }
  state.SetLabel("k=8 exact");
}
BENCHMARK(BM_WalkStep)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_DenseSpectrum(benchmark::State& state) {
  auto p = static_cast<std::uint64_t>(state.range(0));
  auto r = ring_mod(p);
  auto t = table_mod(p);
  auto S = unipotent(t, r);
  spectral::CayleyOperator op(t, S, spectral::CayleyOperator::Mode::Dense);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral::spectrum_top2(op));
  }
}
BENCHMARK(BM_DenseSpectrum)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_IterativeSpectrum(benchmark::State& state) {
  auto p = static_cast<std::uint64_t>(state.range(0));
  auto r = ring_mod(p);
  auto t = table_mod(p);
  auto S = unipotent(t, r);
  spectral::CayleyOperator op(t, S, spectral::CayleyOperator::Mode::MatrixFree);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral::spectrum_top2(op));
  }
}
BENCHMARK(BM_IterativeSpectrum)->Arg(13)->Arg(29)->Unit(benchmark::kMillisecond);

static void BM_TriplingReport(benchmark::State& state) {
  auto p = static_cast<std::uint64_t>(state.range(0));
  auto t = table_mod(p);
  SplitMix64 rng(99);
  std::vector<std::uint32_t> v;
  for (int i = 0; i < 4; ++i) {
    auto g = static_cast<std::uint32_t>(rng.below(t->size()));
    v.push_back(g);
    v.push_back(t->inv(g));
  }
  auto S = growth::make_set(std::move(v));
  for (auto _ : state) {
    benchmark::DoNotOptimize(growth::tripling_report(*t, S, {3, 4, 5}));
  }
}
BENCHMARK(BM_TriplingReport)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
