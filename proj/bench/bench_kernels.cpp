#include <benchmark/benchmark.h>

#include <random>

#include "wentw/kernels.hpp"

namespace {

using wentw::Field;
using wentw::Matrix;

/// Deterministic pseudo-random matrix with small integer entries.
Matrix sample(Field f, std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<long> dist(-3, 3);
  std::vector<std::vector<long>> v(rows, std::vector<long>(cols));
  for (auto& row : v)
    for (auto& x : row) x = dist(gen);
  return Matrix::from_ints(f, v);
}

Field field_of(int code) { return code == 0 ? Field::prime(5) : Field::rationals(); }

void BM_MultiplySerial(benchmark::State& s) {
  const auto n = static_cast<std::size_t>(s.range(0));
  Matrix a = sample(field_of(s.range(1)), n, n, 1), b = sample(field_of(s.range(1)), n, n, 2);
  for (auto _ : s) benchmark::DoNotOptimize(wentw::kernels::multiply_serial(a, b));
}

void BM_MultiplyParallel(benchmark::State& s) {
  const auto n = static_cast<std::size_t>(s.range(0));
  Matrix a = sample(field_of(s.range(1)), n, n, 1), b = sample(field_of(s.range(1)), n, n, 2);
  for (auto _ : s) benchmark::DoNotOptimize(wentw::kernels::multiply_parallel(a, b));
}

// Wide relation-style matrices: the shape produced by tensor presentations.
void BM_RrefSerial(benchmark::State& s) {
  const auto n = static_cast<std::size_t>(s.range(0));
  Matrix m = sample(field_of(s.range(1)), n, 2 * n, 3);
  for (auto _ : s) benchmark::DoNotOptimize(wentw::kernels::rref_serial(m));
}

void BM_RrefParallel(benchmark::State& s) {
  const auto n = static_cast<std::size_t>(s.range(0));
  Matrix m = sample(field_of(s.range(1)), n, 2 * n, 3);
  for (auto _ : s) benchmark::DoNotOptimize(wentw::kernels::rref_parallel(m));
}

// Second argument: 0 = F_5, 1 = Q.
void sizes(benchmark::internal::Benchmark* b) {
  for (long n : {64, 128, 256}) b->Args({n, 0});
  for (long n : {32, 64}) b->Args({n, 1});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Apply(sizes);
BENCHMARK(BM_MultiplyParallel)->Apply(sizes);
BENCHMARK(BM_RrefSerial)->Apply(sizes);
BENCHMARK(BM_RrefParallel)->Apply(sizes);

BENCHMARK_MAIN();
