#include <benchmark/benchmark.h>

#include "qpoisson/catalog.hpp"
#include "qpoisson/double_algebra.hpp"
#include "qpoisson/homogeneous.hpp"
#include "qpoisson/sampling.hpp"
#include "qpoisson/twisting.hpp"

using namespace qpoisson;

namespace {

const char* const kNames[] = {"aff1", "sl2_coboundary", "manin_sl2_trace", "manin_so3"};

void BM_BuildDouble(benchmark::State& state) {
  const QuasiBialgebra qb = builtin(kNames[state.range(0)]).qb;
  for (auto _ : state) benchmark::DoNotOptimize(build_double(qb));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_BuildDouble)->DenseRange(0, 3);

void BM_CheckDoubleAxioms(benchmark::State& state) {
  const DoubleAlgebra d = build_double(builtin(kNames[state.range(0)]).qb);
  for (auto _ : state) benchmark::DoNotOptimize(check_double_axioms(d));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_CheckDoubleAxioms)->DenseRange(0, 3);

// Scaling of the basis-triple loop with the double's dimension 2n.
void BM_CheckJacobiAbelianDouble(benchmark::State& state) {
  const DoubleAlgebra d = build_double(builtin("abelian(" + std::to_string(state.range(0)) + ")").qb);
  for (auto _ : state) benchmark::DoNotOptimize(check_jacobi(d.algebra()));
}
BENCHMARK(BM_CheckJacobiAbelianDouble)->DenseRange(2, 6, 2);

void BM_Cyb(benchmark::State& state) {
  const LieAlgebra g = sl2();
  Sampler s(1);
  const Tensor r = s.bivector(3);
  for (auto _ : state) benchmark::DoNotOptimize(cyb(g, r));
}
BENCHMARK(BM_Cyb);

void BM_Classify(benchmark::State& state) {
  const CatalogEntry e = builtin("manin_sl2_trace");
  const DoubleAlgebra d = build_double(e.qb);
  Sampler s(2);
  const HomDatum datum(e.qb, e.subalgebras[1], s.bivector(3));
  for (auto _ : state) benchmark::DoNotOptimize(is_quasi_poisson_datum(d, datum));
}
BENCHMARK(BM_Classify);

void BM_CheckTwistIso(benchmark::State& state) {
  const QuasiBialgebra qb = builtin(kNames[state.range(0)]).qb;
  Sampler s(3);
  const Tensor r = s.bivector(qb.dim());
  for (auto _ : state) benchmark::DoNotOptimize(check_twist_iso(qb, r));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_CheckTwistIso)->DenseRange(0, 3);

void BM_TwistEquations(benchmark::State& state) {
  const QuasiBialgebra qb = builtin("manin_so3").qb;
  for (auto _ : state) benchmark::DoNotOptimize(twist_equations(qb));
}
BENCHMARK(BM_TwistEquations);

}  // namespace

BENCHMARK_MAIN();
