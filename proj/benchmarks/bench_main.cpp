#include <benchmark/benchmark.h>

#include "toricgraph/families.hpp"
#include "toricgraph/hilbert.hpp"
#include "toricgraph/invariants.hpp"
#include "toricgraph/koszul.hpp"
#include "toricgraph/linquo.hpp"
#include "toricgraph/primitive.hpp"
#include "toricgraph/taylor.hpp"
#include "toricgraph/toric.hpp"

using namespace toricgraph;

namespace {

void BM_ToricBasisK2t(benchmark::State& state) {
  const Graph g = build_family(FamilySpec::k2t(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto ctx = edge_context(g);
    benchmark::DoNotOptimize(toric_ideal(g, ctx));
  }
}
BENCHMARK(BM_ToricBasisK2t)->Arg(4)->Arg(6)->Arg(8);

void BM_ToricBasisGt(benchmark::State& state) {
  const Graph g = build_family(FamilySpec::gt(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto ctx = edge_context(g, gt_family_order(g));
    benchmark::DoNotOptimize(toric_ideal(g, ctx));
  }
}
BENCHMARK(BM_ToricBasisGt)->Arg(2)->Arg(3)->Arg(4);

void BM_HilbertSeriesGt(benchmark::State& state) {
  const Graph g = build_family(FamilySpec::gt(static_cast<int>(state.range(0))));
  auto ctx = edge_context(g, gt_family_order(g));
  const MonomialIdeal init = initial_ideal(toric_ideal(g, ctx));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(init));
}
BENCHMARK(BM_HilbertSeriesGt)->Arg(3)->Arg(5);

void BM_TaylorBettiK2t(benchmark::State& state) {
  const Graph g = build_family(FamilySpec::k2t(static_cast<int>(state.range(0))));
  auto ctx = edge_context(g);
  const MonomialIdeal init = initial_ideal(toric_ideal(g, ctx));
  for (auto _ : state) benchmark::DoNotOptimize(betti_taylor(init));
}
BENCHMARK(BM_TaylorBettiK2t)->Arg(3)->Arg(4);

void BM_LinearQuotientsGt(benchmark::State& state) {
  const Graph g = build_family(FamilySpec::gt(static_cast<int>(state.range(0))));
  auto ctx = edge_context(g, gt_family_order(g));
  const auto listing = gt_reference_lead_order(ctx, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_linear_quotients(ctx, listing));
}
BENCHMARK(BM_LinearQuotientsGt)->Arg(4)->Arg(6);

void BM_KoszulOracleGt2(benchmark::State& state) {
  const Graph g = build_family(FamilySpec::gt(2));
  auto ctx = edge_context(g, gt_family_order(g));
  const GroebnerBasis gb = toric_ideal(g, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(koszul_betti(g, gb, 4, 8));
}
BENCHMARK(BM_KoszulOracleGt2)->Unit(benchmark::kMillisecond);

void BM_PrimitiveBinomials(benchmark::State& state) {
  const Graph g = build_family(FamilySpec::k2t(static_cast<int>(state.range(0))));
  auto ctx = edge_context(g);
  const GroebnerBasis gb = toric_ideal(g, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(primitive_binomials(g, gb, 8));
}
BENCHMARK(BM_PrimitiveBinomials)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
