#include <benchmark/benchmark.h>

#include "famart/checkers.hpp"
#include "famart/lp.hpp"
#include "famart/spaces.hpp"

using namespace famart;

namespace {

// dense box-constrained LP with a fixed rational pattern
lp::LinearProgram dense_lp(std::size_t n) {
  lp::LinearProgram prog(n);
  for (std::size_t j = 0; j < n; ++j) {
    prog.objective[j] = Rational(static_cast<long>(j % 5) - 1, 3);
    prog.set_lower(j, Rational(-1));
    prog.set_upper(j, Rational(2));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = Rational(static_cast<long>((i * 7 + j * 3) % 11) - 5, 1 + (i + j) % 4);
    prog.add(std::move(row), lp::Relation::LessEqual, Rational(static_cast<long>(i % 3) + 1));
  }
  return prog;
}

}  // namespace

static void BM_LpSolve(benchmark::State& state) {
  const auto prog = dense_lp(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lp::solve(prog));
}
BENCHMARK(BM_LpSolve)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_FindEmfapBp(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const auto bp = spaces::example_bp(n, n - 2);
  const LinSpace l = spaces::trading_space(bp.filtered.model, bp.filtered.filtration, bp.filtered.process);
  for (auto _ : state) benchmark::DoNotOptimize(checkers::find_emfap(bp.filtered.model, l));
}
BENCHMARK(BM_FindEmfapBp)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_CStarDmw(benchmark::State& state) {
  const auto dmw = spaces::example_dmw(Rational(1, 3), static_cast<unsigned>(state.range(0)));
  const LinSpace l = spaces::trading_space(dmw.model, dmw.filtration, dmw.process);
  for (auto _ : state) benchmark::DoNotOptimize(checkers::compute_cstar(dmw.model, l));
}
BENCHMARK(BM_CStarDmw)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_DivergenceStudy(benchmark::State& state) {
  const std::vector<unsigned> horizons{10, 20, 40, 80, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(checkers::divergence_study(Rational(1, 3), horizons));
}
BENCHMARK(BM_DivergenceStudy)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
