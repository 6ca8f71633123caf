#include <benchmark/benchmark.h>

#include <random>

#include "bposet/extensions.hpp"
#include "bposet/hecke.hpp"
#include "bposet/hecke_ops.hpp"
#include "bposet/intervals.hpp"
#include "bposet/poset.hpp"
#include "bposet/regular.hpp"
#include "bposet/weak_order.hpp"

using namespace bposet;

namespace {

BnPoset sample(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  return random_distinguished_poset(n, rng);
}

void BM_LinearExtensions(benchmark::State& st) {
  const auto P = BnPoset::from_relations(static_cast<int>(st.range(0)), {});
  for (auto _ : st) benchmark::DoNotOptimize(linear_extensions_B(P));
}
BENCHMARK(BM_LinearExtensions)->DenseRange(2, 5);

void BM_Kbp(benchmark::State& st) {
  const auto P = sample(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(kbp(P));
}
BENCHMARK(BM_Kbp)->DenseRange(2, 5);

void BM_PosetModule(benchmark::State& st) {
  const auto P = BnPoset::from_relations(static_cast<int>(st.range(0)), {});
  for (auto _ : st) benchmark::DoNotOptimize(module_MBP(P));
}
BENCHMARK(BM_PosetModule)->DenseRange(2, 4);

void BM_Induce(benchmark::State& st) {
  const auto X = module_MBP(BnPoset::from_relations(2, {}));
  const auto Y = module_MP_typeA(FinitePoset::antichain({1, 2}));
  for (auto _ : st) benchmark::DoNotOptimize(induce(X, Y));
}
BENCHMARK(BM_Induce);

void BM_Restrict(benchmark::State& st) {
  const auto M = module_MBP(BnPoset::from_relations(3, {{-2, 0}, {0, 2}, {3, 1}, {-1, -3}}));
  for (auto _ : st) benchmark::DoNotOptimize(restrict(M, 1));
}
BENCHMARK(BM_Restrict);

void BM_CertifyIsomorphism(benchmark::State& st) {
  const auto M = module_MBP(BnPoset::from_relations(static_cast<int>(st.range(0)), {}));
  for (auto _ : st) benchmark::DoNotOptimize(certify_isomorphism(M, M));
}
BENCHMARK(BM_CertifyIsomorphism)->DenseRange(1, 2);

void BM_AllIntervals(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(all_intervals(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_AllIntervals)->DenseRange(2, 3);

void BM_IntervalEndpoints(benchmark::State& st) {
  const auto P = poset_of({SignedPermutation::identity(4), SignedPermutation::longest(4)});
  for (auto _ : st) benchmark::DoNotOptimize(sigma_rho_endpoints(P));
}
BENCHMARK(BM_IntervalEndpoints);

void BM_WbimDecomposition(benchmark::State& st) {
  const IntervalR I(SignedPermutation::identity(3), SignedPermutation::longest(3));
  for (auto _ : st) benchmark::DoNotOptimize(interval_simple_decomposition(I));
}
BENCHMARK(BM_WbimDecomposition);

}  // namespace

BENCHMARK_MAIN();
