#include <benchmark/benchmark.h>

#include <random>

#include "elim/elimination.hpp"
#include "elim/mahler.hpp"
#include "elim/rational_linalg.hpp"

namespace {

using namespace elim;

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(dist(rng), 1 + (r + c) % 3);
  }
  return m;
}

MultiPoly random_form(std::size_t vars, unsigned degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  MultiPoly f(vars);
  for (const auto& m : monomial_basis(vars, degree)) f.add_term(m, dist(rng));
  return f;
}

void BM_Det(benchmark::State& state) {
  const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Det)->RangeMultiplier(2)->Range(4, 64);

void BM_BinaryResultant(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const FormSystem sys({random_form(2, d, 2), random_form(2, d, 3)});
  for (auto _ : state) benchmark::DoNotOptimize(resultant(sys));
}
BENCHMARK(BM_BinaryResultant)->DenseRange(1, 6);

void BM_TernaryResultant(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const FormSystem sys({random_form(3, d, 4), random_form(3, d, 5), random_form(3, d, 6)});
  for (auto _ : state) benchmark::DoNotOptimize(resultant(sys));
}
BENCHMARK(BM_TernaryResultant)->DenseRange(1, 3);

void BM_SylvesterResultant(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const auto f = random_form(2, d, 7);
  const auto g = random_form(2, d, 8);
  for (auto _ : state) benchmark::DoNotOptimize(sylvester_resultant(f, g));
}
BENCHMARK(BM_SylvesterResultant)->DenseRange(1, 6);

void BM_Theta(benchmark::State& state) {
  const auto f = random_form(3, 3, 9);
  const auto shards = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theta(f, 40960, 1, shards).mean);
}
BENCHMARK(BM_Theta)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
