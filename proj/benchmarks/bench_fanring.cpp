#include <benchmark/benchmark.h>

#include <vector>

#include "fanring/catalog.hpp"
#include "fanring/oracle.hpp"
#include "fanring/reducer.hpp"
#include "fanring/ringops.hpp"
#include "fanring/shelling.hpp"

using namespace fanring;

namespace {

// (1*x1 + 2*x2 + ... + d*xd)^n, a dense input that touches every ray.
XPolynomial dense_power(Mode m, const Fan& fan) {
  int d = fan.ray_count();
  XPolynomial sum(m, d, fan.dim);
  for (int j = 0; j < d; ++j) {
    std::vector<int> e(d, 0);
    e[j] = 1;
    sum.add_term(std::move(e), CoeffElem::constant(m, fan.dim, j + 1));
  }
  XPolynomial p = XPolynomial::one(m, d, fan.dim);
  for (int k = 0; k < fan.dim; ++k) p = p * sum;
  return p;
}

void reduce_bench(benchmark::State& state, const char* name, Mode mode) {
  const auto& e = catalog::entry(name);
  auto data = make_shelling_data(e.fan, *e.order);
  Reducer red(e.fan, data, mode);
  red.warm_up();
  XPolynomial p = dense_power(mode, e.fan);
  for (auto _ : state) benchmark::DoNotOptimize(red.reduce(p));
}

void warmup_bench(benchmark::State& state, const char* name) {
  const auto& e = catalog::entry(name);
  auto data = make_shelling_data(e.fan, *e.order);
  for (auto _ : state) {
    Reducer red(e.fan, data, Mode::additive);
    red.warm_up();
    benchmark::DoNotOptimize(&red);
  }
}

void table_bench(benchmark::State& state, const char* name, int jobs) {
  const auto& e = catalog::entry(name);
  auto data = make_shelling_data(e.fan, *e.order);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        mult_table(e.fan, data, Mode::multiplicative, jobs));
}

void search_bench(benchmark::State& state, const char* name) {
  const auto& e = catalog::entry(name);
  SearchOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(find_shelling(e.fan, opts));
}

void oracle_bench(benchmark::State& state, const char* name) {
  const auto& e = catalog::entry(name);
  auto data = make_shelling_data(e.fan, *e.order);
  for (auto _ : state) {
    AdditiveOracle oracle(e.fan, data);
    benchmark::DoNotOptimize(oracle.quotient_dimension(e.fan.dim));
  }
}

}  // namespace

BENCHMARK_CAPTURE(reduce_bench, p2_additive, "p2", Mode::additive);
BENCHMARK_CAPTURE(reduce_bench, p2_multiplicative, "p2", Mode::multiplicative);
BENCHMARK_CAPTURE(reduce_bench, oda_84_additive, "oda_84", Mode::additive);
BENCHMARK_CAPTURE(reduce_bench, oda_84_multiplicative, "oda_84",
                  Mode::multiplicative);
BENCHMARK_CAPTURE(warmup_bench, oda_84, "oda_84");
BENCHMARK_CAPTURE(table_bench, p1xp1_serial, "p1xp1", 1);
BENCHMARK_CAPTURE(table_bench, oda_84_serial, "oda_84", 1);
BENCHMARK_CAPTURE(table_bench, oda_84_jobs4, "oda_84", 4);
BENCHMARK_CAPTURE(search_bench, bl_p2, "bl_p2");
BENCHMARK_CAPTURE(search_bench, oda_84, "oda_84");
BENCHMARK_CAPTURE(oracle_bench, p1xp1, "p1xp1");

BENCHMARK_MAIN();
