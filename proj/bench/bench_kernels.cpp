// Serial reference kernels against their OpenMP counterparts on one
// moderately large smash product.

#include <benchmark/benchmark.h>

#include "sspec/constructions.hpp"
#include "sspec/homology.hpp"

using namespace sspec;

namespace {

const SSetPtr& left() {
  static const SSetPtr x = smash(simplicial_sphere(2), add_disjoint_basepoint(standard_simplex(2)));
  return x;
}
const SSetPtr& right() {
  static const SSetPtr y = smash(circle(), add_disjoint_basepoint(standard_simplex(2)));
  return y;
}
const SmashProduct& big() {
  static const SmashProduct p(left(), right());
  return p;
}

void smash_product(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::parallel : Execution::serial;
  for (auto _ : state) {
    SmashProduct p(left(), right(), SmashProduct::Mode::smash, exec);
    benchmark::DoNotOptimize(p.result());
  }
  state.counters["simplices"] = big().result()->total_count();
  state.counters["threads"] = exec == Execution::serial ? 1 : max_threads();
}

void validate_sset(benchmark::State& state) {
  const auto& x = *big().result();
  for (auto _ : state) {
    if (state.range(0))
      benchmark::DoNotOptimize(validate(x, Execution::parallel));
    else
      benchmark::DoNotOptimize(validate_serial_reference(x));
  }
  state.counters["simplices"] = x.total_count();
}

void chain_complex(benchmark::State& state) {
  const auto& x = *big().result();
  for (auto _ : state) {
    if (state.range(0))
      benchmark::DoNotOptimize(reduced_chain_complex(x, Execution::parallel));
    else
      benchmark::DoNotOptimize(reduced_chain_complex_serial_reference(x));
  }
  state.counters["simplices"] = x.total_count();
}

}  // namespace

// Arg 0: serial reference, arg 1: OpenMP.
BENCHMARK(smash_product)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(validate_sset)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(chain_complex)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
