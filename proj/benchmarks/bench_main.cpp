#include <benchmark/benchmark.h>

#include "hecke_cells/cells.hpp"
#include "hecke_cells/tilting.hpp"

using namespace hecke_cells;

static void BM_KLBasis(benchmark::State& state, const char* type) {
  auto G = AffineWeylGroup::from_type(type);
  auto elems = G.enumerate_W(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    KLBasis kl(G);
    for (const auto& w : elems) benchmark::DoNotOptimize(kl.element(w));
  }
  state.counters["elements"] = static_cast<double>(elems.size());
}
BENCHMARK_CAPTURE(BM_KLBasis, C2, "C2")->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_KLBasis, G2, "G2")->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_AntisphericalBasis(benchmark::State& state, const char* type) {
  auto G = AffineWeylGroup::from_type(type);
  for (auto _ : state) {
    AntisphericalBasis basis(G, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(basis.size());
  }
}
BENCHMARK_CAPTURE(BM_AntisphericalBasis, C2, "C2")->Arg(21)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AntisphericalBasis, G2, "G2")->Arg(25)->Unit(benchmark::kMillisecond);

static void BM_RightCells(benchmark::State& state, const char* type, int L, int margin) {
  auto G = AffineWeylGroup::from_type(type);
  for (auto _ : state) {
    CellPartition P = right_cells(G, L, margin);
    benchmark::DoNotOptimize(P.num_cells());
  }
}
BENCHMARK_CAPTURE(BM_RightCells, C2, "C2", 20, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RightCells, G2, "G2", 24, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RightCells, A3, "A3", 12, 4)->Unit(benchmark::kMillisecond);

static void BM_FusionTable(benchmark::State& state, const char* type, int p) {
  auto G = AffineWeylGroup::from_type(type);
  auto alc = alcove_weights(G, p);
  for (auto _ : state)
    for (const auto& l : alc)
      for (const auto& m : alc) benchmark::DoNotOptimize(fusion_row(G, l, m, p));
}
BENCHMARK_CAPTURE(BM_FusionTable, C2_p7, "C2", 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FusionTable, G2_p11, "G2", 11)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
