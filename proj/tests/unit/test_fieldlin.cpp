#include <doctest.h>

#include "testutil.hpp"

using namespace gdtest;
using namespace gdnov;

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK(Rational::parse("-2").str() == "-2");
    CHECK(Rational(0).is_zero());
    CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
    CHECK((Rational(1, 2) * Rational(2, 3)).str() == "1/3");
    CHECK(Rational(3, 7).inv() == Rational(7, 3));
    CHECK_THROWS_AS(Rational::parse("abc"), SchemaError);
    CHECK_THROWS_AS(Rational(1, 0), SchemaError);
    CHECK_THROWS_AS(Rational(1).operator/(Rational(0)), InvariantError);
}

TEST_CASE("prime field arithmetic") {
    const Field f = GF(7);
    const Mod a = Mod::from_int(5, 7), b = Mod::from_int(4, 7);
    CHECK((a + b).value() == 2);
    CHECK((a - b).value() == 1);
    CHECK((a * b).value() == 6);
    CHECK((a / b).value() == 3); // 5 * 4^{-1} = 5*2 = 10 = 3
    CHECK(Mod::from_int(-1, 7).value() == 6);
    CHECK(Mod::from_int(14, 7).is_zero());
    for (std::uint32_t v = 1; v < 7; ++v)
        CHECK((Mod(v, 7) * Mod(v, 7).inv()).value() == 1);
    CHECK_THROWS_AS(Mod(0, 7).inv(), InvariantError);
    CHECK(FieldOps<Mod>::parse(f, "13").value() == 6);
    CHECK_THROWS_AS(FieldOps<Mod>::parse(f, "x"), SchemaError);
}

TEST_CASE("field descriptor validates primality") {
    CHECK(Field::prime(2).modulus() == 2);
    CHECK(Field::prime(2147483647).modulus() == 2147483647u); // 2^31 - 1
    CHECK_THROWS_AS(Field::prime(1), SchemaError);
    CHECK_THROWS_AS(Field::prime(4), SchemaError);
    CHECK_THROWS_AS(Field::prime(91), SchemaError); // 7*13
    CHECK(Field::rationals().characteristic() == 0);
    CHECK(Field::prime(5).characteristic() == 5);
}

TEST_CASE("rref: pinned examples") {
    const Field q = Q();
    SUBCASE("identity is its own reduced form") {
        const auto m = Matrix<Rational>::identity(q, 3);
        const auto [r, rank] = rref(m);
        CHECK(r == m);
        CHECK(rank == 3);
    }
    SUBCASE("zero matrix") {
        const Matrix<Rational> m(q, 2, 3);
        const auto [r, rank] = rref(m);
        CHECK(r == m);
        CHECK(rank == 0);
    }
    SUBCASE("[[2,4],[1,2]] reduces to [[1,2],[0,0]]") {
        const auto m = matrix_of<Rational>(q, {{2, 4}, {1, 2}});
        const auto [r, rank] = rref(m);
        CHECK(r == matrix_of<Rational>(q, {{1, 2}, {0, 0}}));
        CHECK(rank == 1);
    }
}

TEST_CASE("kernel: pinned examples and a brute-force oracle over GF(3)") {
    SUBCASE("identity has zero kernel") {
        const auto k = kernel(Matrix<Rational>::identity(Q(), 4));
        CHECK(k.dim() == 0);
    }
    SUBCASE("zero map has full kernel") {
        const auto k = kernel(Matrix<Rational>(Q(), 3, 3));
        CHECK(k == Subspace<Rational>::full(Q(), 3));
    }
    SUBCASE("[[1,1]] over GF(3): kernel is span{(1,2)}") {
        const Field f = GF(3);
        const auto m = matrix_of<Mod>(f, {{1, 1}});
        const auto k = kernel(m);
        CHECK(k.dim() == 1);
        CHECK(k.basis_vector(0) == vec_of<Mod>(f, {1, 2}));
        // oracle: membership must match m·v = 0 over all 9 vectors of GF(3)^2
        for (long long a = 0; a < 3; ++a)
            for (long long b = 0; b < 3; ++b) {
                const Vec<Mod> v = vec_of<Mod>(f, {a, b});
                const bool in_kernel = vec_is_zero(m.apply(v));
                CHECK(k.contains(v) == in_kernel);
            }
    }
}

TEST_CASE("subspace sum, intersection, complement: pinned examples") {
    const Field q = Q();
    const auto e = [&](std::size_t i) { return basis_unit<Rational>(q, 3, i); };
    const auto span = [&](const std::vector<Vec<Rational>>& gens) {
        return Subspace<Rational>::span_of(q, 3, gens);
    };

    SUBCASE("span{e1} + span{e2} = span{e1,e2}; a + a = a") {
        const auto s = subspace_sum(span({e(0)}), span({e(1)}));
        CHECK(s == span({e(0), e(1)}));
        const auto a = span({e(0), e(2)});
        CHECK(subspace_sum(a, a) == a);
    }
    SUBCASE("span{e1+e2} + span{e2} = span{e1,e2} (RREF oracle)") {
        const auto s = subspace_sum(span({vec_of<Rational>(q, {1, 1, 0})}), span({e(1)}));
        CHECK(s == span({e(0), e(1)}));
    }
    SUBCASE("intersections") {
        const auto a = span({e(0), e(1)});
        CHECK(subspace_intersect(a, a) == a);
        CHECK(subspace_intersect(span({e(0)}), span({e(1)})).dim() == 0);
        const auto s = subspace_intersect(span({e(0), e(1)}), span({e(1), e(2)}));
        CHECK(s == span({e(1)}));
        // dimension formula on this instance
        CHECK(2 + 2 == subspace_sum(span({e(0), e(1)}), span({e(1), e(2)})).dim() + s.dim());
    }
    SUBCASE("complement picks the standard vectors at non-pivot columns") {
        CHECK(complement(Subspace<Rational>::zero(q, 3)) == Subspace<Rational>::full(q, 3));
        CHECK(complement(Subspace<Rational>::full(q, 3)).dim() == 0);
        const auto a = span({vec_of<Rational>(q, {1, 1, 0})});
        const auto c = complement(a);
        CHECK(c == span({e(1), e(2)}));
        // direct-sum oracle
        CHECK(subspace_sum(a, c) == Subspace<Rational>::full(q, 3));
        CHECK(subspace_intersect(a, c).dim() == 0);
    }
}

TEST_CASE("contains: pinned examples") {
    const Field q = Q();
    const auto zero3 = vec_of<Rational>(q, {0, 0, 0});
    const auto any = Subspace<Rational>::span_of(q, 3, {vec_of<Rational>(q, {1, 2, 3})});
    CHECK(any.contains(zero3));
    const auto e2span = Subspace<Rational>::span_of(q, 3, {vec_of<Rational>(q, {0, 1, 0})});
    CHECK_FALSE(e2span.contains(vec_of<Rational>(q, {1, 0, 0})));

    const Field f5 = GF(5);
    const auto line = Subspace<Mod>::span_of(f5, 2, {vec_of<Mod>(f5, {1, 2})});
    CHECK(line.contains(vec_of<Mod>(f5, {1, 2})));
    CHECK(line.contains(vec_of<Mod>(f5, {3, 1}))); // 3*(1,2) = (3,6) = (3,1)
    CHECK_FALSE(line.contains(vec_of<Mod>(f5, {1, 3})));
}

template <Scalar K>
static void kernel_properties(const Field& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        const Matrix<K> m = random_matrix<K>(f, rows, cols, rng);

        const auto [r1, rank] = rref(m);
        CHECK(rref(r1).first == r1); // idempotence
        CHECK(rank + kernel(m).dim() == cols);

        const std::size_t n = 1 + rng() % 5;
        const auto a = Subspace<K>::row_span(random_matrix<K>(f, 1 + rng() % 3, n, rng));
        const auto b = Subspace<K>::row_span(random_matrix<K>(f, 1 + rng() % 3, n, rng));
        CHECK(a.dim() + b.dim() == subspace_sum(a, b).dim() + subspace_intersect(a, b).dim());

        const auto c = complement(a);
        CHECK(subspace_intersect(a, c).dim() == 0);
        CHECK(subspace_sum(a, c) == Subspace<K>::full(f, n));
    }
}

TEST_CASE("kernel-module properties over Q and GF(5)") {
    kernel_properties<Rational>(Q(), 20240601);
    kernel_properties<Mod>(GF(5), 20240602);
}

TEST_CASE("shape and field mismatches are rejected") {
    const Field q = Q();
    const Field f5 = GF(5);
    const auto a = Subspace<Rational>::full(q, 2);
    const auto b = Subspace<Rational>::full(q, 3);
    CHECK_THROWS_AS(subspace_sum(a, b), InvariantError);
    CHECK_THROWS_AS(subspace_intersect(a, b), InvariantError);
    CHECK_THROWS_AS(a.contains(vec_of<Rational>(q, {1, 2, 3})), InvariantError);
    const auto m5 = Matrix<Mod>::identity(f5, 2);
    const auto mq = Matrix<Rational>::identity(q, 2);
    CHECK_THROWS_AS(mq * matrix_of<Rational>(q, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}),
                    InvariantError);
    CHECK_THROWS_AS(Mod(1, 5) + Mod(1, 7), InvariantError);
}
