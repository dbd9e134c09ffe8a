#include <benchmark/benchmark.h>

#include <eulerops/diff_op.hpp>
#include <eulerops/random.hpp>
#include <eulerops/structure.hpp>
#include <eulerops/symbol_poly.hpp>

#include <vector>

using namespace eulerops;

namespace {

const BundleModel kModel(2, 2);

std::vector<DiffOp> operators(std::uint32_t order, std::size_t count) {
  RandomSource rng(1234 + order);
  std::vector<DiffOp> ops;
  for (std::size_t k = 0; k < count; ++k) ops.push_back(rng.op(kModel, order, 3, 4));
  return ops;
}

}  // namespace

static void BM_Compose(benchmark::State& state) {
  const auto ops = operators(static_cast<std::uint32_t>(state.range(0)), 16);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(ops[k % 16], ops[(k + 1) % 16]));
    ++k;
  }
}
BENCHMARK(BM_Compose)->DenseRange(1, 4);

static void BM_Bracket(benchmark::State& state) {
  const auto ops = operators(static_cast<std::uint32_t>(state.range(0)), 16);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bracket(ops[k % 16], ops[(k + 1) % 16]));
    ++k;
  }
}
BENCHMARK(BM_Bracket)->DenseRange(1, 4);

static void BM_Apply(benchmark::State& state) {
  const auto ops = operators(3, 16);
  RandomSource rng(99);
  const FiberPoly u = rng.poly(kModel, static_cast<std::uint32_t>(state.range(0)), 12);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(apply(ops[k++ % 16], u));
}
BENCHMARK(BM_Apply)->Arg(3)->Arg(6)->Arg(9);

static void BM_PoissonBracket(benchmark::State& state) {
  RandomSource rng(7);
  const SymbolPoly p = rng.symbol(kModel, 4, 8);
  const SymbolPoly q = rng.symbol(kModel, 4, 8);
  for (auto _ : state) benchmark::DoNotOptimize(poisson_bracket(p, q));
}
BENCHMARK(BM_PoissonBracket);

static void BM_Substitute(benchmark::State& state) {
  RandomSource rng(11);
  const auto power = static_cast<std::uint32_t>(state.range(0));
  const FiberPoly u = (FiberPoly::base_var(kModel, 0) + FiberPoly::fiber_var(kModel, 1)).pow(power);
  std::vector<FiberPoly> images;
  for (int g = 0; g < 4; ++g) images.push_back(rng.poly(kModel, 2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(u.substitute(images));
}
BENCHMARK(BM_Substitute)->Arg(4)->Arg(8);

static void BM_JetFactorize(benchmark::State& state) {
  RandomSource rng(5);
  const JetSpec spec{rng.point(kModel), 2};
  FiberPoly u = FiberPoly::one(kModel);
  for (int f = 0; f < 3; ++f) {
    const FiberPoly g = rng.nonzero_poly(kModel, 2, 3);
    u = u * (g - FiberPoly::constant(kModel, g.eval(spec.point)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(jet_factorize(u, spec));
}
BENCHMARK(BM_JetFactorize);
BENCHMARK_MAIN();
