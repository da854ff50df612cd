#include <benchmark/benchmark.h>

#include <random>

#include "gdnov/affine.hpp"
#include "gdnov/construct.hpp"
#include "gdnov/cybe.hpp"

namespace {

using namespace gdnov;

template <Scalar K>
Matrix<K> random_matrix(const Field& f, std::size_t n, std::mt19937_64& rng) {
    Matrix<K> m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long long v = f.kind() == Field::Kind::prime
                                    ? static_cast<long long>(rng() % f.modulus())
                                    : static_cast<long long>(rng() % 11) - 5;
            m.at(i, j) = FieldOps<K>::from_int(f, v);
        }
    return m;
}

void BM_RrefRationals8x8(benchmark::State& state) {
    const Field q = Field::rationals();
    std::mt19937_64 rng(7);
    const Matrix<Rational> m = random_matrix<Rational>(q, 8, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRationals8x8);

void BM_RrefGF5_8x8(benchmark::State& state) {
    const Field f = Field::prime(5);
    std::mt19937_64 rng(7);
    const Matrix<Mod> m = random_matrix<Mod>(f, 8, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefGF5_8x8);

void BM_CompatCheckSl3Q(benchmark::State& state) {
    const Field q = Field::rationals();
    const auto L = catalog<Rational>("sln", q, 3);
    std::mt19937_64 rng(11);
    const LinearOperator<Rational> t(random_matrix<Rational>(q, L.dim(), rng));
    const auto p = product_from_operator(L, t);
    for (auto _ : state) benchmark::DoNotOptimize(check_compat(L, p));
}
BENCHMARK(BM_CompatCheckSl3Q);

void BM_CybeDefectSo3GF3(benchmark::State& state) {
    const Field f = Field::prime(3);
    const auto L = catalog<Mod>("so3", f);
    std::mt19937_64 rng(13);
    const TensorElement<Mod> x(random_matrix<Mod>(f, 3, rng));
    for (auto _ : state) benchmark::DoNotOptimize(cybe_defect(L, x));
}
BENCHMARK(BM_CybeDefectSo3GF3);

void BM_RepDefectSo3GF3(benchmark::State& state) {
    const Field f = Field::prime(3);
    const auto L = catalog<Mod>("so3", f);
    const auto adj = adjoint_rep(L);
    std::mt19937_64 rng(13);
    const TensorElement<Mod> x(random_matrix<Mod>(f, 3, rng));
    for (auto _ : state) benchmark::DoNotOptimize(rep_defect(adj, x));
}
BENCHMARK(BM_RepDefectSo3GF3);

void BM_EnumerateAff2GF3RmatrixStrong(benchmark::State& state) {
    const Field f = Field::prime(3);
    const auto L = catalog<Mod>("aff2", f);
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_operator(L, OperatorFilter::RmatrixAndStrong, 1u << 20,
                          [&](const LinearOperator<Mod>&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateAff2GF3RmatrixStrong);

void BM_AffineJacobiSl2Window3(benchmark::State& state) {
    const auto ex = sl2_example<Rational>(Field::rationals());
    for (auto _ : state)
        benchmark::DoNotOptimize(check_affine_jacobi(ex.algebra, ex.product, 3));
}
BENCHMARK(BM_AffineJacobiSl2Window3);

} // namespace

BENCHMARK_MAIN();
