#ifndef GDNOV_CONSTRUCT_HPP
#define GDNOV_CONSTRUCT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "gdnov/enumerate.hpp"
#include "gdnov/novikov.hpp"

namespace gdnov {

template <Scalar K>
Vec<K> basis_unit(const Field& f, std::size_t n, std::size_t j) {
    Vec<K> v = vec_zero<K>(f, n);
    v[j] = FieldOps<K>::one(f);
    return v;
}

/// Data for the abelian-subalgebra operator: an abelian K with
/// K + [K,G] ≠ G, a complement Kbar of K + [K,G], and a linear map
/// T0 : Kbar → K given in the canonical bases (t0 is dim K × dim Kbar).
template <Scalar K>
struct AbelianOperatorSpec {
    Subspace<K> sub_k;
    Subspace<K> kbar;
    Matrix<K> t0;
};

/// Builds T with T(u1 + u2) = T0(u1) for u1 ∈ Kbar, u2 ∈ K + [K,G].
/// The result vanishes on K + [K,G] and maps into K, so it satisfies the
/// R-matrix and strong conditions outright.
template <Scalar K>
LinearOperator<K> abelian_operator(const LieAlgebra<K>& L, const AbelianOperatorSpec<K>& spec) {
    const std::size_t n = L.dim();
    const Field& f = L.field();
    if (spec.sub_k.ambient_dim() != n || spec.kbar.ambient_dim() != n)
        throw InvariantError("DimensionMismatch", "abelian_operator: ambient dimension mismatch");
    if (!is_abelian_subspace(L, spec.sub_k))
        throw InvariantError("AbelianityViolated", "K is not an abelian subspace: [K,K] != {0}");

    const Subspace<K> w = subspace_sum(spec.sub_k, ad_image(L, spec.sub_k));
    if (w.dim() == n)
        throw InvariantError("NotProper", "K + [K,G] is the whole algebra");
    if (subspace_intersect(spec.kbar, w).dim() != 0 || spec.kbar.dim() + w.dim() != n)
        throw InvariantError("NotComplement", "Kbar is not a direct complement of K + [K,G]");
    if (spec.t0.rows() != spec.sub_k.dim() || spec.t0.cols() != spec.kbar.dim())
        throw InvariantError("DimensionMismatch", "T0 must be dim K × dim Kbar");

    // decomposition matrix: columns are Kbar's basis then W's basis
    const std::size_t dkb = spec.kbar.dim();
    Matrix<K> dec(f, n, dkb + w.dim());
    for (std::size_t c = 0; c < dkb; ++c)
        for (std::size_t r = 0; r < n; ++r) dec.at(r, c) = spec.kbar.basis().at(c, r);
    for (std::size_t c = 0; c < w.dim(); ++c)
        for (std::size_t r = 0; r < n; ++r) dec.at(r, dkb + c) = w.basis().at(c, r);

    Matrix<K> m(f, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto x = solve(dec, basis_unit<K>(f, n, j));
        if (!x)
            throw InvariantError("NotComplement", "decomposition failed: Kbar ⊕ (K+[K,G]) ≠ G");
        // Kbar-coordinates of b_j, pushed through T0, expressed in K's basis
        Vec<K> kb_coords(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(dkb));
        const Vec<K> k_coords = spec.t0.apply(kb_coords);
        for (std::size_t r = 0; r < spec.sub_k.dim(); ++r)
            for (std::size_t i = 0; i < n; ++i)
                if (!k_coords[r].is_zero()) m.at(i, j) += k_coords[r] * spec.sub_k.basis().at(r, i);
    }
    return LinearOperator<K>(std::move(m));
}

/// u∘v = σ(v)·u on an abelian Lie algebra; associative and Novikov.
template <Scalar K>
BilinearProduct<K> sigma_product(const LieAlgebra<K>& L, const Vec<K>& sigma) {
    if (!L.is_abelian())
        throw InvariantError("NotAbelian", "sigma_product requires an abelian Lie algebra");
    if (sigma.size() != L.dim())
        throw InvariantError("DimensionMismatch", "sigma length mismatch");
    std::map<ScKey, K> d;
    for (std::size_t j = 0; j < L.dim(); ++j) {
        if (sigma[j].is_zero()) continue;
        for (std::size_t i = 0; i < L.dim(); ++i) d[{i, j, i}] = sigma[j];
    }
    return BilinearProduct<K>(L.field(), L.dim(), d);
}

/// Reproducible record of what the existence search found.
template <Scalar K>
struct ExistenceCertificate {
    enum class Case { abelian, noncentral };
    Case kind;
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    std::size_t candidates_tried = 0;

    std::optional<Vec<K>> sigma;              // abelian case
    std::optional<Vec<K>> u0, v0;             // noncentral case
    std::optional<Subspace<K>> v_space;       // noncentral case: T kills this
    std::optional<LinearOperator<K>> op;      // noncentral case
    BilinearProduct<K> product;
    Vec<K> nontrivial;                        // v0∘v0 = −[u0,v0] (or b0∘b0), nonzero
};

namespace detail {

/// F·u + [u, G]
template <Scalar K>
Subspace<K> span_with_image(const LieAlgebra<K>& L, const Vec<K>& u) {
    std::vector<Vec<K>> gens;
    gens.push_back(u);
    for (std::size_t j = 0; j < L.dim(); ++j) gens.push_back(L.bracket_right_basis(u, j));
    return Subspace<K>::span_of(L.field(), L.dim(), gens);
}

} // namespace detail

/// Bounded search for a nontrivial Novikov product over L.
///
/// Abelian L: returns the σ-product with σ the dual of the first basis
/// vector.  Otherwise: searches for a non-central u0 with F·u0 + [u0,G] ≠ G
/// (candidates: basis vectors, pairwise sums, then seeded pseudorandom
/// combinations, up to `budget` candidates in total), picks v0 outside that
/// space with [u0,v0] ≠ 0 (repairing a commuting first pick by adding a
/// suitable w ∈ [u0,G]), completes V ⊇ F·u0 + [u0,G] with V ⊕ F·v0 = G, and
/// returns the operator T(v0) = u0, T(V) = 0 with its product.
///
/// Throws NotFound when the budget is exhausted: legitimate over fields the
/// underlying existence theorem does not cover (e.g. so3 over Q).
template <Scalar K>
ExistenceCertificate<K> existence(const LieAlgebra<K>& L, std::uint64_t seed = 1,
                                  std::size_t budget = 1000) {
    const std::size_t n = L.dim();
    const Field& f = L.field();
    if (n == 0) throw InvariantError("InvalidLie", "existence requires a nonzero algebra");
    if (!check_lie(L, 1).passed)
        throw InvariantError("InvalidLie", "existence requires a valid Lie algebra");

    if (L.is_abelian()) {
        Vec<K> sigma = basis_unit<K>(f, n, 0);
        BilinearProduct<K> prod = sigma_product(L, sigma);
        Vec<K> nt = prod.eval_right_basis(basis_unit<K>(f, n, 0), 0);
        if (vec_is_zero(nt)) throw Error("InternalError", "sigma product unexpectedly trivial");
        ExistenceCertificate<K> cert{ExistenceCertificate<K>::Case::abelian, seed, budget, 1,
                                     sigma,        std::nullopt,
                                     std::nullopt, std::nullopt,
                                     std::nullopt, std::move(prod),
                                     std::move(nt)};
        return cert;
    }

    std::mt19937_64 rng(seed);
    std::size_t tried = 0;

    auto next_candidate = [&](std::size_t idx) -> std::optional<Vec<K>> {
        if (idx < n) return basis_unit<K>(f, n, idx);
        std::size_t pair = idx - n;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (pair == 0) {
                    Vec<K> v = basis_unit<K>(f, n, i);
                    v[j] = FieldOps<K>::one(f);
                    return v;
                }
                --pair;
            }
        // seeded pseudorandom combination; reject zero
        for (int attempt = 0; attempt < 64; ++attempt) {
            Vec<K> v = vec_zero<K>(f, n);
            for (std::size_t i = 0; i < n; ++i) {
                if (f.kind() == Field::Kind::prime)
                    v[i] = FieldOps<K>::from_int(f, static_cast<long long>(rng() % f.modulus()));
                else
                    v[i] = FieldOps<K>::from_int(f, static_cast<long long>(rng() % 7) - 3);
            }
            if (!vec_is_zero(v)) return v;
        }
        return std::nullopt;
    };

    for (std::size_t idx = 0; tried < budget; ++idx) {
        const auto cand = next_candidate(idx);
        if (!cand) break;
        ++tried;
        const Vec<K>& u0 = *cand;

        const Matrix<K> ad_u0 = L.ad(u0);
        if (ad_u0.is_zero()) continue; // central
        const Subspace<K> w_space = detail::span_with_image(L, u0);
        if (w_space.dim() == n) continue;

        // v0: first standard vector outside W, repaired if it commutes with u0
        std::optional<Vec<K>> v0;
        std::optional<Vec<K>> first_outside;
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> e = basis_unit<K>(f, n, j);
            if (w_space.contains(e)) continue;
            if (!first_outside) first_outside = e;
            if (!vec_is_zero(L.bracket(u0, e))) { v0 = std::move(e); break; }
        }
        if (!v0 && first_outside) {
            for (std::size_t j = 0; j < n; ++j) {
                const Vec<K> w = L.bracket_right_basis(u0, j);
                if (vec_is_zero(w)) continue;
                if (!vec_is_zero(L.bracket(u0, w))) {
                    Vec<K> repaired = *first_outside;
                    vec_add_inplace(repaired, w);
                    v0 = std::move(repaired);
                    break;
                }
            }
        }
        if (!v0) continue; // u0 turned out central on every reachable direction

        // V: extend W + F·v0 to the whole space by standard vectors, then
        // drop v0's line: V = W + chosen standard vectors.
        std::vector<Vec<K>> v_gens;
        for (std::size_t r = 0; r < w_space.dim(); ++r) v_gens.push_back(w_space.basis_vector(r));
        {
            std::vector<Vec<K>> u_gens = v_gens;
            u_gens.push_back(*v0);
            const Subspace<K> u_space = Subspace<K>::span_of(f, n, u_gens);
            for (std::size_t e = 0; e < n; ++e) {
                Vec<K> unit = basis_unit<K>(f, n, e);
                if (!u_space.contains(unit)) v_gens.push_back(std::move(unit));
            }
        }
        const Subspace<K> v_space = Subspace<K>::span_of(f, n, v_gens);

        // T(v0) = u0, T(V) = 0
        Matrix<K> dec(f, n, 1 + v_space.dim());
        for (std::size_t r = 0; r < n; ++r) dec.at(r, 0) = (*v0)[r];
        for (std::size_t c = 0; c < v_space.dim(); ++c)
            for (std::size_t r = 0; r < n; ++r) dec.at(r, 1 + c) = v_space.basis().at(c, r);
        Matrix<K> m(f, n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const auto x = solve(dec, basis_unit<K>(f, n, j));
            if (!x) throw Error("InternalError", "existence: V ⊕ F·v0 should cover G");
            const K alpha = (*x)[0];
            for (std::size_t i = 0; i < n; ++i)
                if (!alpha.is_zero()) m.at(i, j) = alpha * u0[i];
        }
        LinearOperator<K> op(std::move(m));
        BilinearProduct<K> prod = product_from_operator(L, op);

        Vec<K> nt = prod.eval(*v0, *v0);
        Vec<K> expected = vec_neg(L.bracket(u0, *v0));
        if (vec_is_zero(nt) || !(nt == expected))
            throw Error("InternalError", "existence: nontriviality v0∘v0 = −[u0,v0] failed");

        ExistenceCertificate<K> cert{ExistenceCertificate<K>::Case::noncentral,
                                     seed,
                                     budget,
                                     tried,
                                     std::nullopt,
                                     u0,
                                     *v0,
                                     v_space,
                                     op,
                                     std::move(prod),
                                     std::move(nt)};
        return cert;
    }
    throw SearchError("NotFound", "no suitable u0 found within budget of " +
                                      std::to_string(budget) + " candidates (tried " +
                                      std::to_string(tried) + ")");
}

/// The sl(2) triple: bracket table, the operator sending e− to e+ and
/// killing h and e+, and the induced product
///   h∘e− = −2e+,  e−∘h = 4e+,  e−∘e− = −h,  all other basis products 0.
template <Scalar K>
struct Sl2Example {
    LieAlgebra<K> algebra;
    LinearOperator<K> op;
    BilinearProduct<K> product;
};

template <Scalar K>
Sl2Example<K> sl2_example(const Field& f) {
    if (f.characteristic() == 2)
        throw InvariantError("BadCharacteristic", "sl2 example degenerates in characteristic 2");
    LieAlgebra<K> L = catalog<K>("sl2", f);
    Matrix<K> m(f, 3, 3);
    m.at(1, 2) = FieldOps<K>::one(f); // T(e-) = e+
    LinearOperator<K> op(std::move(m));
    BilinearProduct<K> prod = product_from_operator(L, op);
    return {std::move(L), std::move(op), std::move(prod)};
}

/// Root-height layering of sl(n): E_ij sits at height j−i; k = n−1 is the
/// maximal height, ℓ = floor(k/2)+1 the cutoff, and K the span of all layers
/// from ℓ up to k.  K is abelian because two heights ≥ ℓ sum past k.
template <Scalar K>
struct HeightDecomposition {
    std::size_t n = 0;   // rank parameter of sl(n)
    std::size_t k = 0;   // max height
    std::size_t ell = 0; // cutoff
    std::map<long long, Subspace<K>> layers; // height m ↦ G_m, 0 < |m| ≤ k
    Subspace<K> sub_k;
};

template <Scalar K>
struct SlnHeights {
    LieAlgebra<K> algebra;
    HeightDecomposition<K> heights;
    AbelianOperatorSpec<K> spec;
};

template <Scalar K>
SlnHeights<K> sln_heights(std::size_t n, const Field& f) {
    if (n < 2) throw SchemaError("InvalidDimension", "sln_heights requires n >= 2");
    LieAlgebra<K> L = catalog<K>("sln", f, n);
    const std::size_t dim = L.dim();
    const std::size_t k = n - 1;
    const std::size_t ell = k / 2 + 1;

    auto layer = [&](long long m) {
        std::vector<Vec<K>> gens;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if (static_cast<long long>(j) - static_cast<long long>(i) != m) continue;
                gens.push_back(basis_unit<K>(f, dim, sln_unit_index(n, i, j)));
            }
        return Subspace<K>::span_of(f, dim, gens);
    };

    HeightDecomposition<K> hd{n, k, ell, {}, Subspace<K>::zero(f, dim)};
    for (long long m = -static_cast<long long>(k); m <= static_cast<long long>(k); ++m) {
        if (m == 0) continue;
        hd.layers.emplace(m, layer(m));
    }

    Subspace<K> ksub = Subspace<K>::zero(f, dim);
    for (std::size_t h = ell; h <= k; ++h)
        ksub = subspace_sum(ksub, hd.layers.at(static_cast<long long>(h)));
    hd.sub_k = ksub;
    if (!is_abelian_subspace(L, ksub))
        throw Error("InternalError", "height subalgebra K is not abelian");

    const Subspace<K> w = subspace_sum(ksub, ad_image(L, ksub));

    // low negative layers: heights −k .. ℓ−k−1; they meet K+[K,G] only in 0
    Subspace<K> low = Subspace<K>::zero(f, dim);
    for (long long m = -static_cast<long long>(k);
         m <= static_cast<long long>(ell) - static_cast<long long>(k) - 1; ++m)
        low = subspace_sum(low, hd.layers.at(m));
    if (subspace_intersect(low, w).dim() != 0)
        throw Error("InternalError", "height layers meet K + [K,G] nontrivially");

    // greedy completion of `low` to a full complement of K + [K,G]
    std::vector<Vec<K>> kbar_gens;
    for (std::size_t r = 0; r < low.dim(); ++r) kbar_gens.push_back(low.basis_vector(r));
    {
        Subspace<K> u_space = subspace_sum(low, w);
        for (std::size_t e = 0; e < dim; ++e) {
            Vec<K> unit = basis_unit<K>(f, dim, e);
            if (!u_space.contains(unit)) {
                kbar_gens.push_back(unit);
                u_space = subspace_sum(u_space, Subspace<K>::span_of(f, dim, {unit}));
            }
        }
    }
    Subspace<K> kbar = Subspace<K>::span_of(f, dim, kbar_gens);

    Matrix<K> t0(f, ksub.dim(), kbar.dim());
    t0.at(0, 0) = FieldOps<K>::one(f); // first Kbar basis vector ↦ first K basis vector

    return {std::move(L), std::move(hd), AbelianOperatorSpec<K>{ksub, std::move(kbar), std::move(t0)}};
}

enum class OperatorFilter { All, Rmatrix, RmatrixAndStrong };

/// Streams every n×n operator over GF(p) (lexicographic) that passes the
/// filter.  Caller's fn sees each operator exactly once.
template <Scalar K, class Fn>
void for_each_operator(const LieAlgebra<K>& L, OperatorFilter filter, std::uint64_t cap, Fn&& fn) {
    for_each_matrix<K>(L.field(), L.dim(), L.dim(), cap, [&](const Matrix<K>& m) {
        const LinearOperator<K> t(m);
        if (filter != OperatorFilter::All) {
            if (!check_rmatrix(L, t, 1).passed) return;
            if (filter == OperatorFilter::RmatrixAndStrong && !check_strong(L, t, 1).passed)
                return;
        }
        fn(t);
    });
}

/// Materialized variant of for_each_operator (desk scale only).
template <Scalar K>
std::vector<LinearOperator<K>> enumerate_operators(const LieAlgebra<K>& L, OperatorFilter filter,
                                                   std::uint64_t cap = (1u << 24)) {
    std::vector<LinearOperator<K>> out;
    for_each_operator(L, filter, cap, [&](const LinearOperator<K>& t) { out.push_back(t); });
    return out;
}

} // namespace gdnov

#endif
