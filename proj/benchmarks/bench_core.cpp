#include <benchmark/benchmark.h>

#include <random>

#include "ogw/cohomology.hpp"
#include "ogw/invariants.hpp"
#include "ogw/orientation.hpp"

using namespace ogw;

namespace {

PreModuliSpec standard_base(int k, int l, std::int64_t beta) {
  PreModuliSpec base;
  for (int i = 1; i <= k; ++i) base.k.push_back(Label::plain(i));
  for (int i = 1; i <= l; ++i) base.l.push_back(Label::plain(i));
  base.beta = beta;
  return base;
}

std::vector<std::int32_t> initial_rho(int r) {
  std::vector<std::int32_t> rho;
  for (int j = 1; j <= r; ++j) rho.push_back(j);
  return rho;
}

void BM_EnumerateTrees(benchmark::State& state) {
  const PreModuliSpec base =
      standard_base(static_cast<int>(state.range(0)), 1, state.range(1));
  const auto rho = initial_rho(static_cast<int>(state.range(2)));
  for (auto _ : state) {
    auto trees = enumerate_trees(base, rho);
    benchmark::DoNotOptimize(trees);
  }
}
BENCHMARK(BM_EnumerateTrees)->Args({2, 1, 2})->Args({3, 2, 2})->Args({3, 2, 3});

void BM_ThetaZeta(benchmark::State& state) {
  const PreModuliSpec base = standard_base(3, 1, 2);
  const auto trees = enumerate_trees(base, initial_rho(static_cast<int>(state.range(0))));
  const AmbientDim m(2);
  for (auto _ : state) {
    for (const LabeledTree& t : trees) {
      benchmark::DoNotOptimize(theta(t, m));
      benchmark::DoNotOptimize(zeta(t, m));
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(trees.size()));
}
BENCHMARK(BM_ThetaZeta)->Arg(2)->Arg(3);

void BM_SortingPermutation(benchmark::State& state) {
  const PreModuliSpec base = standard_base(0, 0, 3);
  std::vector<LabeledTree> odd_even;
  for (const LabeledTree& t : enumerate_trees(base, initial_rho(3)))
    if (is_odd_even(t)) odd_even.push_back(t);
  for (auto _ : state) {
    for (const LabeledTree& t : odd_even)
      benchmark::DoNotOptimize(sorting_permutation(t));
  }
}
BENCHMARK(BM_SortingPermutation);

void BM_NormalForm(benchmark::State& state) {
  const AmbientDim m(static_cast<int>(state.range(0)));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> h_exp(0, 2 * m.m + 3);
  std::uniform_int_distribution<int> small_exp(0, 2);
  EquivariantPolynomial p(m);
  for (int t = 0; t < 12; ++t) {
    Monomial mono;
    mono.exps.assign(static_cast<std::size_t>(3 * m.m + 2), 0);
    mono.exps[0] = static_cast<std::uint32_t>(h_exp(rng));
    for (std::size_t i = 1; i < mono.exps.size(); ++i)
      mono.exps[i] = static_cast<std::uint32_t>(small_exp(rng));
    p.add_term(std::move(mono), coeff(rng));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(p));
  }
}
BENCHMARK(BM_NormalForm)->Arg(1)->Arg(2);

void BM_ResolutionLedger(benchmark::State& state) {
  const AmbientDim m(1);
  const ConstraintTuple none = ConstraintTuple::from_l_vec({0, 0, 0}, m);
  for (auto _ : state) {
    auto ledger = resolution_ledger(2, none, static_cast<std::int64_t>(state.range(0)), m);
    benchmark::DoNotOptimize(ledger);
  }
}
BENCHMARK(BM_ResolutionLedger)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
