#include <benchmark/benchmark.h>

#include "negwit/mixed.hpp"
#include "negwit/pure.hpp"
#include "negwit/random.hpp"
#include "negwit/rng.hpp"

namespace {

using namespace negwit;

PureState random_state(int d, std::uint64_t seed) {
  RngStream rng(seed);
  return make_pure(sample_amplitudes(AmplitudeClass::ArbitraryComplex, d, rng));
}

// The witness reads the amplitudes directly; no eigenproblem.
void BM_ln_approx(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const PureState psi = random_state(d, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ln_approx(psi).ln);
  }
}
BENCHMARK(BM_ln_approx)->Arg(8)->Arg(16)->Arg(32)->Arg(41);

// The oracle diagonalizes the d^2 x d^2 partial transpose.
void BM_ln_exact(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const PureState psi = random_state(d, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ln_exact(psi).ln);
  }
}
BENCHMARK(BM_ln_exact)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_haar_unitary(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  RngStream rng(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(haar_unitary(d, rng));
  }
}
BENCHMARK(BM_haar_unitary)->Arg(8)->Arg(41)->Arg(121);

void BM_random_density_matrix(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  RngStream rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_density_matrix(d, rng));
  }
}
BENCHMARK(BM_random_density_matrix)->Arg(16)->Arg(121)->Unit(benchmark::kMillisecond);

void BM_ln_approx_mixed(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  RngStream rng(4);
  DensityMatrix rho = random_density_matrix(d * d, rng);
  rho.split = d;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ln_approx_mixed(rho).ln);
  }
}
BENCHMARK(BM_ln_approx_mixed)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
