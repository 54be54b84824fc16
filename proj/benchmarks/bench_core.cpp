// Micro-benchmarks for the hot paths: dense products, the Jacobi
// eigensolver, verification both ways (the criterion stays cheap while the
// direct relations blow up as n^3 x n^3), and pair enumeration.

#include <benchmark/benchmark.h>

#include "tlforge/permutation.hpp"
#include "tlforge/random.hpp"
#include "tlforge/rank1.hpp"
#include "tlforge/rank2.hpp"

using namespace tlforge;

namespace {

ComplexMatrix random_matrix(std::size_t n, Rng& rng) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.complex_gaussian();
    return m;
}

TLSolution period4_solution(std::size_t n) {
    const double m1 = 1.3 / static_cast<double>(n);
    const double m2 = 2.0 / static_cast<double>(n) - m1;
    return build_vvn4k(n, N4kFamily::s1, std::polar(std::sqrt(m1), 0.4),
                       std::polar(std::sqrt(m2), 1.9), std::polar(1.0, 0.7));
}

void bm_matrix_product(benchmark::State& state) {
    Rng rng(1);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = random_matrix(n, rng), b = random_matrix(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_matrix_product)->Arg(16)->Arg(64)->Arg(216);

void bm_kron(benchmark::State& state) {
    Rng rng(2);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = random_matrix(n, rng);
    const ComplexMatrix id = ComplexMatrix::identity(n);
    for (auto _ : state) benchmark::DoNotOptimize(kron(a, id));
}
BENCHMARK(bm_kron)->Arg(8)->Arg(16);

void bm_hermitian_eigensystem(benchmark::State& state) {
    Rng rng(3);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = random_matrix(n, rng);
    const ComplexMatrix h = (a + a.dagger()) * cplx(0.5, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigensystem(h));
}
BENCHMARK(bm_hermitian_eigensystem)->Arg(8)->Arg(16)->Arg(32);

void bm_verify_criterion(benchmark::State& state) {
    const TLSolution sol = period4_solution(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_by_criterion(sol));
}
BENCHMARK(bm_verify_criterion)->Arg(4)->Arg(8)->Arg(12);

void bm_verify_axioms(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const TLSolution sol = period4_solution(n);
    const ComplexMatrix t = build_generator(sol);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_tl_axioms(t, cplx(sol.Q, 0.0), n));
}
BENCHMARK(bm_verify_axioms)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void bm_enumerate_pairs(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_admissible_classes(n));
}
BENCHMARK(bm_enumerate_pairs)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_reduce_to_normal_form(benchmark::State& state) {
    Rng rng(4);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rank1Params p;
    p.n = n;
    std::vector<int> image(n);
    for (std::size_t k = 0; k < n; ++k) image[k] = static_cast<int>(n - k);
    p.sigma = Permutation::from_image(image);
    for (std::size_t k = 0; k < n / 2; ++k)
        p.free_z.push_back(std::polar(0.2 + 0.5 * static_cast<double>(k + 1) / n, 0.3 + 0.4 * k));
    const TLSolution sol = build_rank1(p);
    const ComplexMatrix g = random_unitary(n, rng);
    const ComplexMatrix v = g * sol.spanning.mats[0] * g.transpose();
    for (auto _ : state) benchmark::DoNotOptimize(reduce_to_normal_form(v, sol.Q));
}
BENCHMARK(bm_reduce_to_normal_form)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
