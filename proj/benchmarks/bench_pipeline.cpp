#include <benchmark/benchmark.h>

#include "nullcert/certificate.hpp"
#include "nullcert/fuzz.hpp"
#include "nullcert/sysio.hpp"

using namespace nullcert;

namespace {

const SystemF& counterexample() {
  static const SystemF F = parse_system("vars: x1 x2 x3\nx2 + x3\nx2*x3\nx1*x3 + 1\n");
  return F;
}

void BM_SystemBasis(benchmark::State& state) {
  const auto& F = counterexample();
  for (auto _ : state) benchmark::DoNotOptimize(reduced_groebner_basis(F.polys()));
}
BENCHMARK(BM_SystemBasis);

void BM_GraphIdealBasis(benchmark::State& state) {
  const auto I = build_graph_ideal(counterexample());
  for (auto _ : state) benchmark::DoNotOptimize(reduced_groebner_basis(I.generators));
}
BENCHMARK(BM_GraphIdealBasis);

void BM_ScaledIdealBasis(benchmark::State& state) {
  const auto J = build_scaled_graph_ideal(counterexample());
  for (auto _ : state) benchmark::DoNotOptimize(reduced_groebner_basis(J.generators));
}
BENCHMARK(BM_ScaledIdealBasis);

void BM_Certify(benchmark::State& state) {
  const auto& F = counterexample();
  for (auto _ : state) benchmark::DoNotOptimize(certify(F));
}
BENCHMARK(BM_Certify);

// one generated trial through the whole property suite
void BM_FuzzTrial(benchmark::State& state) {
  FuzzParams p;
  const SystemF F = gen_inconsistent_system(p, static_cast<std::size_t>(state.range(0)));
  const ComputationLimits limits;
  for (auto _ : state) benchmark::DoNotOptimize(run_property_suite(F, limits, 1));
}
BENCHMARK(BM_FuzzTrial)->Arg(0)->Arg(1)->Arg(55)->Unit(benchmark::kMillisecond);

void BM_ParseRender(benchmark::State& state) {
  const auto ring = make_lex_ring({"z", "x1", "x2", "x3", "y1", "y2", "y3"});
  const std::string text = "z + x1^2*y2 - x1*x2*y3 + x1*y1 - y3";
  for (auto _ : state) benchmark::DoNotOptimize(render_polynomial(parse_polynomial(text, ring)));
}
BENCHMARK(BM_ParseRender);

}  // namespace

BENCHMARK_MAIN();
