#include <benchmark/benchmark.h>

#include "chisini/criterion.hpp"
#include "chisini/families.hpp"
#include "chisini/homsearch.hpp"
#include "chisini/invariants.hpp"
#include "chisini/product_lattice.hpp"
#include "chisini/search.hpp"

namespace {

const chisini::curve_invariants exceptional_curve{10, 51, 108, 12};

void bm_validate_candidate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(chisini::validate_discriminant_candidate(exceptional_curve));
  }
}
BENCHMARK(bm_validate_candidate);

void bm_plucker_dual(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(chisini::plucker_dual(exceptional_curve));
  }
}
BENCHMARK(bm_plucker_dual);

void bm_uniqueness_threshold(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(chisini::chisini_check(exceptional_curve, 5));
  }
}
BENCHMARK(bm_uniqueness_threshold);

void bm_window_search(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(chisini::find_potential_counterexamples({}));
  }
}
BENCHMARK(bm_window_search);

void bm_exception_sweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(chisini::enumerate_general_type_exceptions(20, 20, 8));
  }
}
BENCHMARK(bm_exception_sweep);

void bm_cusp_model_classes(benchmark::State& state) {
  chisini::marked_presentation pres = chisini::marked_presentation::braid3();
  for (auto _ : state) {
    benchmark::DoNotOptimize(chisini::enumerate_admissible(pres, 4));
  }
}
BENCHMARK(bm_cusp_model_classes);

void bm_orbit_dichotomy_3x3(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(chisini::verify_product_orbit_dichotomy(3, 3));
  }
}
BENCHMARK(bm_orbit_dichotomy_3x3);

}  // namespace

BENCHMARK_MAIN();
