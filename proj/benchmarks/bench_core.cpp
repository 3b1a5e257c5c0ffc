#include <benchmark/benchmark.h>

#include "snakepath/algebra.hpp"
#include "snakepath/cfrac.hpp"
#include "snakepath/maps.hpp"
#include "snakepath/paths.hpp"
#include "snakepath/sgnperm.hpp"
#include "snakepath/snakes.hpp"

namespace {

using namespace snakepath;

const WeightRecipe kTypeB = {{{PermStat::fwex, Var::y},
                              {PermStat::neg, Var::t},
                              {PermStat::cro_b, Var::q}},
                             SignRule::none};

void BM_PolyMultiply(benchmark::State& state) {
  const Poly r = derivative_poly(DerivKind::R, 8, DerivFlavor::q);
  const Poly q = derivative_poly(DerivKind::Q, 8, DerivFlavor::q);
  for (auto _ : state) {
    Poly prod = r * q;
    benchmark::DoNotOptimize(prod);
  }
}
BENCHMARK(BM_PolyMultiply);

void BM_DerivativePoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Poly f = derivative_poly(DerivKind::R, n, DerivFlavor::pq);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_DerivativePoly)->Arg(6)->Arg(8)->Arg(10);

void BM_ExpandB(benchmark::State& state) {
  const CFSpec spec = builtin_spec(SpecName::B);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Series s = expand(spec, order);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ExpandB)->Arg(6)->Arg(8);

void BM_WeightSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Poly f = weight_sum(SchemeId::M, n);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_WeightSum)->Arg(8)->Arg(10);

void BM_EnumeratorBn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Poly f = enumerator(n, PermClass::Bn, kTypeB);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_EnumeratorBn)->Arg(4)->Arg(5);

void BM_EnumeratorBnParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Poly f = enumerator_parallel(n, PermClass::Bn, kTypeB);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_EnumeratorBnParallel)->Arg(5)->Arg(6);

void BM_Lambda1RoundTrip(benchmark::State& state) {
  std::vector<Snake> snakes = enumerate_snakes(5, SnakeFlavor::S0);
  for (auto _ : state) {
    for (const Snake& s : snakes) {
      Snake back = lambda1_inv(lambda1(s));
      benchmark::DoNotOptimize(back);
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(snakes.size()));
}
BENCHMARK(BM_Lambda1RoundTrip);

void BM_Psi1Sweep(benchmark::State& state) {
  std::vector<BMPath> paths = enumerate_paths(SchemeId::H, 6);
  for (auto _ : state) {
    for (const BMPath& p : paths) {
      BMPath img = psi1(p);
      benchmark::DoNotOptimize(img);
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(paths.size()));
}
BENCHMARK(BM_Psi1Sweep);

void BM_SpringerNumbers(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SpringerTriple t = springer_numbers(n);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_SpringerNumbers)->Arg(12)->Arg(16);

void BM_QEulerNumber(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Poly f = q_euler_number(n);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_QEulerNumber)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
