// Serial reference vs OpenMP kernels. Thread count follows IDEALKIT_THREADS.
#include <benchmark/benchmark.h>

#include "idealkit/poly_io.hpp"
#include "idealkit/random.hpp"
#include "idealkit/sumdecomp.hpp"

using namespace idealkit;

namespace {

RingPtr ring() {
  static const auto r = Ring::make({"x1", "x2", "x3", "x4"}, {"y1", "y2", "y3", "y4"});
  return r;
}

std::vector<Monomial> many_monomials(std::size_t count) {
  Rng rng(1);
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_monomial(rng, ring()->num_vars(), (std::uint64_t{1} << ring()->num_vars()) - 1, 8));
  return out;
}

MonomialIdeal curve_ideal() {
  const auto gens = parse_polynomial_list("x1^4, x1^3*x2, x1^2*x2^2*x3, x1*x2^3, x2^4", ring());
  return *MonomialIdeal::from_ideal(Ideal(ring(), gens));
}

MonomialIdeal mirror_ideal() {
  const auto gens = parse_polynomial_list("y1^4, y1^3*y2, y1^2*y2^2*y3, y1*y2^3, y2^4", ring());
  return *MonomialIdeal::from_ideal(Ideal(ring(), gens));
}

Execution exec_of(const benchmark::State& state) {
  return state.range(0) ? Execution::parallel : Execution::serial;
}

void BM_MinGens(benchmark::State& state) {
  const auto gens = many_monomials(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(min_gens(*ring(), gens, exec_of(state)));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_MinGens)->ArgsProduct({{0, 1}, {1024, 4096}})->Unit(benchmark::kMillisecond);

void BM_AssOfPowers(benchmark::State& state) {
  const auto ideal = m_sum(curve_ideal(), mirror_ideal());
  for (auto _ : state) benchmark::DoNotOptimize(ass_of_powers(ideal, static_cast<unsigned>(state.range(1)), 3, exec_of(state)));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_AssOfPowers)->ArgsProduct({{0, 1}, {3, 4}})->Unit(benchmark::kMillisecond);

void BM_PowerDecomposition(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(1));
  const auto a = monomial_table(curve_ideal(), Block::x, n);
  const auto b = monomial_table(mirror_ideal(), Block::y, n);
  for (auto _ : state) benchmark::DoNotOptimize(power_decomposition(a, b, n, true, exec_of(state)));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_PowerDecomposition)->ArgsProduct({{0, 1}, {2, 4}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
