#include <benchmark/benchmark.h>

#include "smdiscord/discord.hpp"
#include "smdiscord/states.hpp"

namespace {

using namespace smdiscord;

void BM_DiscordBellClosedForm(benchmark::State& state) {
  const BellDiagonalParams params{-0.2, -0.2, -0.2};
  const EntropyParams ent = EntropyParams::sharma_mittal(0.5, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(discord_bell(params, ent).signed_value);
  }
}
BENCHMARK(BM_DiscordBellClosedForm);

void BM_HermitianEigenvalues4x4(benchmark::State& state) {
  const ComplexMatrix rho = bell_diagonal_matrix({0.3, -0.4, 0.2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigenvalues(rho).eigenvalues);
  }
}
BENCHMARK(BM_HermitianEigenvalues4x4);

void BM_DiscordOracle(benchmark::State& state) {
  const ComplexMatrix rho = bell_diagonal_matrix({-0.2, -0.2, -0.2});
  const EntropyParams ent = EntropyParams::tsallis(0.5);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(discord_oracle(rho, ent, grid).result.signed_value);
  }
}
BENCHMARK(BM_DiscordOracle)->Arg(200)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
