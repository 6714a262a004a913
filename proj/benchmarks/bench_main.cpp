#include <benchmark/benchmark.h>

#include "confalg/axioms.hpp"
#include "confalg/bimodule.hpp"
#include "confalg/corpus.hpp"
#include "confalg/operators.hpp"
#include "confalg/poly_parse.hpp"
#include "confalg/search.hpp"
#include "confalg/sequation.hpp"

namespace {

using namespace confalg;

void BM_PolyMultiply(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const Poly p = parse_poly("lm + d + d1 - 2*d2 + 1").pow(n);
  const Poly q = parse_poly("lm*d - d1*d2 + 3").pow(n);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_PolyMultiply)->Arg(2)->Arg(4)->Arg(6);

void BM_LeftSymmetricCheckLw(benchmark::State& state) {
  const Structure lw = corpus::lw(corpus::lw_generic_g());
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(lw).verdict);
}
BENCHMARK(BM_LeftSymmetricCheckLw);

void BM_RotaBaxterFamilyCheck(benchmark::State& state) {
  const Structure lw = corpus::lw(corpus::lw_generic_g());
  const ModuleMap r = corpus::lw_type(3);
  for (auto _ : state) benchmark::DoNotOptimize(check_rota_baxter(r, lw, Poly()).verdict);
}
BENCHMARK(BM_RotaBaxterFamilyCheck);

void BM_CanonicalSEquationRank4(benchmark::State& state) {
  const Structure ld = corpus::lw_type3_l_dendriform(corpus::lw_generic_g(), LdFlavor::vertical);
  const auto [r, ambient] = canonical_r(ld, LdFlavor::vertical);
  for (auto _ : state) benchmark::DoNotOptimize(check_s_equation(ambient, r).verdict);
}
BENCHMARK(BM_CanonicalSEquationRank4)->Unit(benchmark::kMillisecond);

void BM_GridSearchLwDegree1(benchmark::State& state) {
  const auto target = SearchTarget::rota_baxter(corpus::lw(Poly(1L)), Poly());
  const Ansatz ansatz = Ansatz::make(target.source(), target.target(), 1);
  const ConstraintSystem sys = generate_system(target, ansatz);
  const std::vector<Rational> grid{Rational(-1), Rational(0), Rational(1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_enumerate(target, ansatz, sys, grid).points.size());
  }
}
BENCHMARK(BM_GridSearchLwDegree1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
