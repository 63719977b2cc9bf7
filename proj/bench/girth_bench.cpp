#include "bbcage/bigraph.hpp"
#include "bbcage/geometry.hpp"

#include <benchmark/benchmark.h>

namespace {

using bbcage::Exec;

bbcage::BipartiteGraph host(int which) {
  switch (which) {
    case 0: return bbcage::incidence_graph(bbcage::symplectic_gq(4));
    case 1: return bbcage::incidence_graph(bbcage::elliptic_quadric_gq(3));
    default: return bbcage::incidence_graph(bbcage::projective_plane(16));
  }
}

const char* host_name(int which) {
  static const char* names[] = {"W(4)", "Q-(5,3)", "PG(2,16)"};
  return names[which];
}

template <Exec E>
void BM_Girth(benchmark::State& state) {
  const auto g = host(static_cast<int>(state.range(0)));
  state.SetLabel(host_name(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(bbcage::girth(g, E));
}
BENCHMARK(BM_Girth<Exec::serial>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Girth<Exec::parallel>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

template <Exec E>
void BM_SymplecticLines(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bbcage::symplectic_gq(q, E));
}
BENCHMARK(BM_SymplecticLines<Exec::serial>)->Arg(4)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymplecticLines<Exec::parallel>)->Arg(4)->Arg(7)->Unit(benchmark::kMillisecond);

template <Exec E>
void BM_EllipticLines(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bbcage::elliptic_quadric_gq(q, E));
}
BENCHMARK(BM_EllipticLines<Exec::serial>)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EllipticLines<Exec::parallel>)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
