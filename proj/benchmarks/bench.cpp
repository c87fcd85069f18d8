#include "gqchar/catalog.hpp"
#include "gqchar/characters.hpp"
#include "gqchar/cyclotomic.hpp"
#include "gqchar/highestweight.hpp"
#include "gqchar/oracle.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace gqchar;

namespace {

std::vector<std::vector<QPoly>> random_monomial_matrix(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> root(0, 5), expo(-4, 4), zero(0, 4);
    std::vector<std::vector<QPoly>> m(static_cast<size_t>(n), std::vector<QPoly>(static_cast<size_t>(n)));
    for (auto& row : m)
        for (auto& x : row)
            if (zero(rng) != 0) x = QPoly(Monomial(root(rng), expo(rng)));
    return m;
}

void BM_matrix_rank(benchmark::State& state) {
    set_cyclotomic_order(6);
    const auto m = random_monomial_matrix(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(matrix_rank(m));
}
BENCHMARK(BM_matrix_rank)->Arg(6)->Arg(12);

void BM_compute_roots(benchmark::State& state) {
    set_cyclotomic_order(6);
    const auto cfg = build_catalog("pibar1", {.cartan = "B3"});
    for (auto _ : state) benchmark::DoNotOptimize(compute_roots(cfg.bichar));
}
BENCHMARK(BM_compute_roots);

void BM_nichols_dim(benchmark::State& state) {
    set_cyclotomic_order(6);
    const auto cfg = build_catalog("pibar2.vii", {.a = 2});
    const Weight lam{2, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(nichols_dim(cfg.bichar, lam));
}
BENCHMARK(BM_nichols_dim);

void BM_gram_rank(benchmark::State& state) {
    set_cyclotomic_order(6);
    const auto cfg = build_catalog("pibar5");
    const auto lam = WeightCharacter::from_lambda_values(
        {Monomial::parse("q^2"), Monomial::parse("z^2*q^-3")});
    const Weight w{3, 3};
    for (auto _ : state) benchmark::DoNotOptimize(irreducible_dim(cfg.bichar, lam, w));
}
BENCHMARK(BM_gram_rank);

void BM_verma_dims(benchmark::State& state) {
    set_cyclotomic_order(6);
    const auto cfg = build_catalog("pibar4");
    const auto rs = compute_roots(cfg.bichar);
    Region reg;
    reg.height_bound = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(verma_dims(rs, reg));
}
BENCHMARK(BM_verma_dims)->Arg(6)->Arg(10);

void BM_is_finite_dim(benchmark::State& state) {
    set_cyclotomic_order(6);
    const auto cfg = build_catalog("pibar2.ii", {.m = 2, .n = 1});
    const auto lam = WeightCharacter::from_lambda_values(
        {Monomial::parse("q^-4"), Monomial::parse("q^2"), Monomial::parse("1")});
    for (auto _ : state) benchmark::DoNotOptimize(is_finite_dim(cfg.bichar, lam));
}
BENCHMARK(BM_is_finite_dim);

} // namespace

BENCHMARK_MAIN();
