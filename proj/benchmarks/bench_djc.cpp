#include <benchmark/benchmark.h>

#include "djc/dynamics.hpp"
#include "djc/fock.hpp"
#include "djc/invariants.hpp"
#include "djc/state.hpp"

using namespace djc;

namespace {

ModelParams detuned_params() {
  ModelParams p;
  p.nu_a = 1.0;
  p.omega_a = 1.5;
  p.nu_b = 1.3;
  p.omega_b = 2.3;
  p.coupling_a = 1.6;
  p.coupling_b = 0.8;
  return p;
}

void BM_ComputeInvariants(benchmark::State& state) {
  const FourQubitState s = random_state(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_invariants(s));
  }
}
BENCHMARK(BM_ComputeInvariants);

void BM_I2Wedge(benchmark::State& state) {
  const FourQubitState s = random_state(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariant_I2_wedge(s));
  }
}
BENCHMARK(BM_I2Wedge);

void BM_I2Plucker(benchmark::State& state) {
  const FourQubitState s = random_state(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariant_I2_plucker(s));
  }
}
BENCHMARK(BM_I2Plucker);

void BM_FourTangle(benchmark::State& state) {
  const FourQubitState s = random_state(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(four_tangle(s));
  }
}
BENCHMARK(BM_FourTangle);

void BM_LocalUnitaryApply(benchmark::State& state) {
  const FourQubitState s = random_state(4);
  const LocalUnitary u = random_local_unitary(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_local_unitaries(s, u));
  }
}
BENCHMARK(BM_LocalUnitaryApply);

void BM_PhiState(benchmark::State& state) {
  const ModelParams p = detuned_params();
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(phi_state(p, 0.6, 0.3, t));
  }
}
BENCHMARK(BM_PhiState);

void BM_OracleStep(benchmark::State& state) {
  const ModelParams p = detuned_params();
  const fock::OracleEvolver oracle(p, {static_cast<int>(state.range(0))});
  const InitialStateSpec spec{Family::Phi, 0.6, 0.3};
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(oracle.four_qubit_at(spec, t));
  }
}
BENCHMARK(BM_OracleStep)->DenseRange(2, 4);

void BM_OracleConstruct(benchmark::State& state) {
  const ModelParams p = detuned_params();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::OracleEvolver(p, {static_cast<int>(state.range(0))}));
  }
}
BENCHMARK(BM_OracleConstruct)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
