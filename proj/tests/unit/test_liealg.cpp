#include <doctest.h>

#include "testutil.hpp"

using namespace gdtest;
using namespace gdnov;

namespace {

/// Independent oracle: integer matrix commutator [A,B] = AB − BA.
std::vector<std::vector<long long>> commutator_ll(const std::vector<std::vector<long long>>& a,
                                                  const std::vector<std::vector<long long>>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    return c;
}

} // namespace

TEST_CASE("bracket: pinned examples") {
    const Field q = Q();
    const auto sl2 = catalog<Rational>("sl2", q);
    const auto h = sl2.basis_vector(0), ep = sl2.basis_vector(1), em = sl2.basis_vector(2);
    CHECK(sl2.bracket(h, ep) == vec_of<Rational>(q, {0, 2, 0}));
    CHECK(sl2.bracket(h, em) == vec_of<Rational>(q, {0, 0, -2}));
    CHECK(sl2.bracket(ep, em) == h);

    const auto heis = catalog<Rational>("heisenberg3", q);
    CHECK(heis.bracket(heis.basis_vector(0), heis.basis_vector(1)) == heis.basis_vector(2));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto u = random_vec<Rational>(q, 3, rng);
        CHECK(vec_is_zero(sl2.bracket(u, u)));
    }
}

TEST_CASE("check_lie: catalog passes, broken table fails with a witness") {
    for (const Field& f : {Q(), GF(3), GF(7)}) {
        field_dispatch(f, [&]<Scalar K>() {
            for (const auto& L : standard_algebras<K>(f)) CHECK(check_lie(L).passed);
        });
    }

    SUBCASE("dim <= 2 tables are vacuously fine") {
        const auto aff2 = catalog<Rational>("aff2", Q());
        CHECK(check_lie(aff2).passed);
        std::map<ScKey, Rational> sc;
        sc[{0, 1, 0}] = Rational(3);
        sc[{0, 1, 1}] = Rational(-7);
        CHECK(check_lie(LieAlgebra<Rational>(Q(), 2, {}, sc)).passed);
    }

    SUBCASE("[x,y]=x, [x,z]=y, [y,z]=0 fails: J(x,y,z) = y") {
        std::map<ScKey, Rational> sc;
        sc[{0, 1, 0}] = Rational(1);
        sc[{0, 2, 1}] = Rational(1);
        const LieAlgebra<Rational> L(Q(), 3, {"x", "y", "z"}, sc);
        const auto rep = check_lie(L);
        CHECK_FALSE(rep.passed);
        CHECK(rep.witness_count == 1);
        REQUIRE(rep.witnesses.size() == 1);
        CHECK(rep.witnesses[0].indices == std::vector<long long>{0, 1, 2});
        CHECK(rep.witnesses[0].defect == vec_of<Rational>(Q(), {0, 1, 0}));
        CHECK(rep.witnesses[0].axiom == "jacobi");
    }
}

TEST_CASE("catalog structure constants match matrix-commutator oracles") {
    const Field q = Q();
    SUBCASE("sl2 via its defining 2x2 matrices") {
        // h = diag(1,-1), e+ = E12, e- = E21
        const std::vector<std::vector<std::vector<long long>>> mats = {
            {{1, 0}, {0, -1}}, {{0, 1}, {0, 0}}, {{0, 0}, {1, 0}}};
        const auto sl2 = catalog<Rational>("sl2", q);
        // expand [m_i, m_j] in the basis and compare with the bracket table
        auto coords = [&](const std::vector<std::vector<long long>>& m) {
            return vec_of<Rational>(q, {m[0][0], m[0][1], m[1][0]}); // h, e+, e- coefficients
        };
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(sl2.basis_bracket(i, j) == coords(commutator_ll(mats[i], mats[j])));
    }
    SUBCASE("sl3 has dim 8 and matches 3x3 commutators") {
        const auto sl3 = catalog<Rational>("sln", q, 3);
        CHECK(sl3.dim() == 8);
        CHECK(check_lie(sl3).passed);
        // basis as integer matrices in catalog order
        std::vector<std::vector<std::vector<long long>>> mats;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                if (i == j) continue;
                std::vector<std::vector<long long>> m(3, std::vector<long long>(3, 0));
                m[i][j] = 1;
                mats.push_back(std::move(m));
            }
        for (std::size_t i = 0; i + 1 < 3; ++i) {
            std::vector<std::vector<long long>> m(3, std::vector<long long>(3, 0));
            m[i][i] = 1;
            m[i + 1][i + 1] = -1;
            mats.push_back(std::move(m));
        }
        auto coords = [&](const std::vector<std::vector<long long>>& m) {
            std::vector<long long> c = {m[0][1], m[0][2], m[1][0], m[1][2], m[2][0], m[2][1],
                                        m[0][0], m[0][0] + m[1][1]};
            return vec_of<Rational>(q, c);
        };
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                CHECK(sl3.basis_bracket(i, j) == coords(commutator_ll(mats[i], mats[j])));
    }
    SUBCASE("aff2 over GF(2)") {
        const auto a = catalog<Mod>("aff2", GF(2));
        CHECK(a.dim() == 2);
        CHECK(a.constants().size() == 1);
    }
    SUBCASE("catalog errors") {
        CHECK_THROWS_AS(catalog<Rational>("nope", q), SchemaError);
        CHECK_THROWS_AS(catalog<Rational>("sln", q, 1), SchemaError);
        CHECK_THROWS_AS(catalog<Rational>("sln", q), SchemaError);
    }
}

TEST_CASE("ad_image: pinned examples") {
    const Field q = Q();
    const auto sl2 = catalog<Rational>("sl2", q);
    const auto heis = catalog<Rational>("heisenberg3", q);

    CHECK(ad_image(sl2, Subspace<Rational>::zero(q, 3)).dim() == 0);
    // z is central in the Heisenberg algebra
    const auto z_span = Subspace<Rational>::span_of(q, 3, {heis.basis_vector(2)});
    CHECK(ad_image(heis, z_span).dim() == 0);
    // [e+, G] = span{e+, h}
    const auto img = ad_image(sl2, Subspace<Rational>::span_of(q, 3, {sl2.basis_vector(1)}));
    CHECK(img == Subspace<Rational>::span_of(q, 3, {sl2.basis_vector(0), sl2.basis_vector(1)}));
}

TEST_CASE("is_abelian_subspace: pinned examples") {
    const Field q = Q();
    const auto sl2 = catalog<Rational>("sl2", q);
    const auto heis = catalog<Rational>("heisenberg3", q);
    CHECK(is_abelian_subspace(sl2, Subspace<Rational>::span_of(q, 3, {sl2.basis_vector(0)})));
    CHECK(is_abelian_subspace(
        heis, Subspace<Rational>::span_of(q, 3, {heis.basis_vector(1), heis.basis_vector(2)})));
    CHECK_FALSE(is_abelian_subspace(
        sl2, Subspace<Rational>::span_of(q, 3, {sl2.basis_vector(1), sl2.basis_vector(2)})));
}

TEST_CASE("center: pinned examples") {
    const Field q = Q();
    const LieAlgebra<Rational> abelian(q, 4, {}, {});
    CHECK(center(abelian) == Subspace<Rational>::full(q, 4));
    CHECK(center(catalog<Rational>("sl2", q)).dim() == 0);
    const auto heis = catalog<Rational>("heisenberg3", q);
    CHECK(center(heis) == Subspace<Rational>::span_of(q, 3, {heis.basis_vector(2)}));
}

TEST_CASE("bracket bilinearity and basis-triple sufficiency on random vectors") {
    const Field q = Q();
    std::mt19937_64 rng(99);
    for (const auto& L : standard_algebras<Rational>(q)) {
        const std::size_t n = L.dim();
        for (int iter = 0; iter < 10; ++iter) {
            const auto u = random_vec<Rational>(q, n, rng);
            const auto u2 = random_vec<Rational>(q, n, rng);
            const auto v = random_vec<Rational>(q, n, rng);
            const auto alpha = random_scalar<Rational>(q, rng);
            // bracket(αu + u2, v) = α·bracket(u,v) + bracket(u2,v)
            Vec<Rational> lhs_arg = vec_scale(alpha, u);
            vec_add_inplace(lhs_arg, u2);
            Vec<Rational> rhs = vec_scale(alpha, L.bracket(u, v));
            vec_add_inplace(rhs, L.bracket(u2, v));
            CHECK(L.bracket(lhs_arg, v) == rhs);
        }
        // basis triples pass (checked above), so random triples must too
        REQUIRE(check_lie(L).passed);
        for (int iter = 0; iter < 100; ++iter) {
            const auto u = random_vec<Rational>(q, n, rng);
            const auto v = random_vec<Rational>(q, n, rng);
            const auto w = random_vec<Rational>(q, n, rng);
            CHECK(vec_is_zero(jacobi_defect(L, u, v, w)));
        }
    }
}

TEST_CASE("ad_image of the full space is the derived subalgebra") {
    const Field q = Q();
    const auto sl2 = catalog<Rational>("sl2", q);
    CHECK(derived_subalgebra(sl2) == Subspace<Rational>::full(q, 3));
    const auto heis = catalog<Rational>("heisenberg3", q);
    CHECK(derived_subalgebra(heis) ==
          Subspace<Rational>::span_of(q, 3, {heis.basis_vector(2)}));
    const LieAlgebra<Rational> abelian(q, 3, {}, {});
    CHECK(derived_subalgebra(abelian).dim() == 0);
}

TEST_CASE("structure constants must satisfy i<j with indices in range") {
    std::map<ScKey, Rational> bad1;
    bad1[{1, 0, 0}] = Rational(1);
    CHECK_THROWS_AS(LieAlgebra<Rational>(Q(), 2, {}, bad1), SchemaError);
    std::map<ScKey, Rational> bad2;
    bad2[{0, 1, 5}] = Rational(1);
    CHECK_THROWS_AS(LieAlgebra<Rational>(Q(), 2, {}, bad2), SchemaError);
    std::map<ScKey, Rational> bad3;
    bad3[{0, 0, 0}] = Rational(1);
    CHECK_THROWS_AS(LieAlgebra<Rational>(Q(), 2, {}, bad3), SchemaError);
}
