#include <benchmark/benchmark.h>

#include <vector>

#include <qfactor/qfactor.hpp>

using namespace qfactor;

static void BM_PartialTrace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HilbertLayout layout = HilbertLayout::qubits(n);
  const ComplexMatrix rho = random_mixed(layout, Seed{1}).matrix();
  const Region keep = Region::single(n, 0).complement();
  for (auto _ : state) benchmark::DoNotOptimize(marginal(rho, layout, keep));
}
BENCHMARK(BM_PartialTrace)->DenseRange(2, 6, 2);

static void BM_RelativeEntropy(benchmark::State& state) {
  const HilbertLayout layout = HilbertLayout::qubits(static_cast<int>(state.range(0)));
  const DensityMatrix rho = random_mixed(layout, Seed{2});
  const DensityMatrix sigma = random_mixed(layout, Seed{3});
  for (auto _ : state) benchmark::DoNotOptimize(relative_entropy(rho, sigma));
}
BENCHMARK(BM_RelativeEntropy)->DenseRange(2, 6, 2);

static void BM_ProductQF(benchmark::State& state) {
  const HilbertLayout layout = HilbertLayout::qubits(3);
  const DensityMatrix rho = random_mixed(layout, Seed{4});
  const auto factors = random_product_factors(layout, Seed{5});
  for (auto _ : state) benchmark::DoNotOptimize(verify_product_qf(rho, factors));
}
BENCHMARK(BM_ProductQF);

static void BM_XiTerm(benchmark::State& state) {
  const HilbertLayout layout = HilbertLayout::qubits(2);
  const DensityMatrix sigma = random_mixed(layout, Seed{6});
  const QuadratureScheme quad;
  for (auto _ : state) benchmark::DoNotOptimize(xi_error_term(sigma, Region(2, {0}), quad));
}
BENCHMARK(BM_XiTerm)->Unit(benchmark::kMillisecond);

static void BM_ExpectationChain(benchmark::State& state) {
  const HilbertLayout layout = HilbertLayout::qubits(2);
  const DensityMatrix rho = random_mixed(layout, Seed{7});
  const DensityMatrix sigma = random_mixed(layout, Seed{8});
  const QuadratureScheme quad;
  for (auto _ : state) benchmark::DoNotOptimize(verify_expectation_qf(rho, sigma, Region(2, {0}), quad));
}
BENCHMARK(BM_ExpectationChain)->Unit(benchmark::kMillisecond);

static void BM_LiebOperator(benchmark::State& state) {
  const HilbertLayout eight({8}, TrivialSites::Allow);
  const ComplexMatrix g = random_mixed(eight, Seed{9}).matrix();
  const ComplexMatrix f = random_mixed(eight, Seed{10}).matrix();
  const QuadratureScheme quad;
  if (state.range(0) == 0) {
    for (auto _ : state) benchmark::DoNotOptimize(lieb_operator_beta(g, f, quad));
  } else {
    for (auto _ : state) benchmark::DoNotOptimize(lieb_operator_resolvent(g, f));
  }
  state.SetLabel(state.range(0) == 0 ? "beta0" : "resolvent");
}
BENCHMARK(BM_LiebOperator)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Three propagators for the same 3-qubit evolution to t = 1.
static void BM_Propagator(benchmark::State& state) {
  const HilbertLayout layout = HilbertLayout::qubits(3);
  const HeatBathGenerator gen(random_product_factors(layout, Seed{11}));
  const DensityMatrix rho0 = random_mixed(layout, Seed{12});
  const std::vector<double> grid{1.0};
  switch (state.range(0)) {
    case 0:
      for (auto _ : state) benchmark::DoNotOptimize(evolve_closed_form(gen, rho0, 1.0));
      state.SetLabel("closed form");
      break;
    case 1:
      for (auto _ : state) benchmark::DoNotOptimize(evolve_ode(gen, rho0, grid));
      state.SetLabel("rk4");
      break;
    default:
      for (auto _ : state) benchmark::DoNotOptimize(evolve_superoperator(gen, rho0, 1.0));
      state.SetLabel("superoperator");
  }
}
BENCHMARK(BM_Propagator)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_GlobalLSEstimate(benchmark::State& state) {
  const HilbertLayout layout = HilbertLayout::qubits(2);
  const HeatBathGenerator gen(random_product_factors(layout, Seed{13}));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_global_ls(gen, 50, Seed{14}));
}
BENCHMARK(BM_GlobalLSEstimate)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
