#include <benchmark/benchmark.h>

#include "semishor/quantum.hpp"
#include "semishor/semiclassical.hpp"

using namespace semishor;

namespace {

void BM_QuantumFixedK(benchmark::State& state) {
  const auto l = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quantum::quantum_distribution(33, 5, l, KMode::fixed, 1));
  state.SetComplexityN(std::int64_t{1} << l);
}

void BM_SemiPaperFixedK(benchmark::State& state) {
  const auto l = static_cast<unsigned>(state.range(0));
  const semiclassical::SemiclassicalParams params{semiclassical::EvalMode::paper_formula, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(semiclassical::semiclassical_distribution(33, 5, l, params, KMode::fixed, 1));
  }
  state.SetComplexityN(std::int64_t{1} << l);
}

void BM_SemiStrictFixedK(benchmark::State& state) {
  const auto l = static_cast<unsigned>(state.range(0));
  const semiclassical::SemiclassicalParams params{semiclassical::EvalMode::strict_integral, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(semiclassical::semiclassical_distribution(33, 5, l, params, KMode::fixed, 1));
  }
}

// One paper-formula column by the direct O(q^2) sum.
void BM_PaperColumn(benchmark::State& state) {
  const auto l = static_cast<unsigned>(state.range(0));
  const std::uint64_t q = std::uint64_t{1} << l;
  for (auto _ : state) {
    double total = 0.0;
    for (std::uint64_t c = 0; c < q; ++c) {
      total += std::norm(semiclassical::semiclassical_amplitude(c, 1, q, 10, semiclassical::EvalMode::paper_formula));
    }
    benchmark::DoNotOptimize(total);
  }
  state.SetComplexityN(static_cast<std::int64_t>(q));
}

void BM_GateString(benchmark::State& state) {
  const auto l = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quantum::apply_gate_string(l));
}

}  // namespace

BENCHMARK(BM_QuantumFixedK)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SemiPaperFixedK)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SemiStrictFixedK)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PaperColumn)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_GateString)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
