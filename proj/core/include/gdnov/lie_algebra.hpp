#ifndef GDNOV_LIE_ALGEBRA_HPP
#define GDNOV_LIE_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gdnov/check_report.hpp"
#include "gdnov/subspace.hpp"

namespace gdnov {

/// Sparse structure-constant key: [b_i, b_j] has the coefficient of b_k.
using ScKey = std::array<std::size_t, 3>;

/// Finite-dimensional Lie algebra presented by structure constants
/// c_{ij}^k with [b_i, b_j] = Σ_k c_{ij}^k b_k.  Only i < j is stored;
/// i > j follows by antisymmetry and i = j is zero, so antisymmetry cannot
/// be violated by construction.  The Jacobi identity is NOT validated here:
/// run check_lie explicitly (deliberately broken tables are legal inputs
/// and serve as negative controls).
template <Scalar K>
class LieAlgebra {
public:
    LieAlgebra(const Field& f, std::size_t dim, std::vector<std::string> basis_names,
               const std::map<ScKey, K>& constants)
        : field_(f), dim_(dim), names_(std::move(basis_names)) {
        if (!FieldOps<K>::matches(f))
            throw InvariantError("FieldMismatch", "scalar type does not match field descriptor");
        if (names_.empty()) {
            names_.reserve(dim);
            for (std::size_t i = 0; i < dim; ++i) names_.push_back("b" + std::to_string(i));
        }
        if (names_.size() != dim_)
            throw SchemaError("BadBasisNames", "basis name count differs from dimension");
        for (const auto& [key, c] : constants) {
            const auto [i, j, k] = key;
            if (i >= j)
                throw SchemaError("BadStructureConstants",
                                  "structure constants must be indexed with i < j");
            if (j >= dim_ || k >= dim_)
                throw SchemaError("BadStructureConstants", "structure constant index out of range");
            if (!c.is_zero()) sc_[key] = c;
        }
        build_table();
    }

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const std::map<ScKey, K>& constants() const { return sc_; }

    /// [b_i, b_j] as a coordinate vector (valid for all i, j).
    const Vec<K>& basis_bracket(std::size_t i, std::size_t j) const {
        return table_[i * dim_ + j];
    }

    Vec<K> basis_vector(std::size_t i) const {
        Vec<K> v = vec_zero<K>(field_, dim_);
        v[i] = FieldOps<K>::one(field_);
        return v;
    }

    /// [u, b_j] without materializing the basis vector.
    Vec<K> bracket_right_basis(const Vec<K>& u, std::size_t j) const {
        Vec<K> r = vec_zero<K>(field_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            if (!u[i].is_zero()) vec_axpy(r, u[i], basis_bracket(i, j));
        return r;
    }

    /// [b_i, v]
    Vec<K> bracket_left_basis(std::size_t i, const Vec<K>& v) const {
        Vec<K> r = vec_zero<K>(field_, dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) vec_axpy(r, v[j], basis_bracket(i, j));
        return r;
    }

    /// Bilinear extension of the structure constants.
    Vec<K> bracket(const Vec<K>& u, const Vec<K>& v) const {
        if (u.size() != dim_ || v.size() != dim_)
            throw InvariantError("DimensionMismatch", "bracket: vector length mismatch");
        Vec<K> r = vec_zero<K>(field_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (v[j].is_zero()) continue;
                const Vec<K>& b = basis_bracket(i, j);
                vec_axpy(r, u[i] * v[j], b);
            }
        }
        return r;
    }

    bool is_abelian() const { return sc_.empty(); }

    /// Matrix of ad_u : v ↦ [u, v].
    Matrix<K> ad(const Vec<K>& u) const {
        Matrix<K> m(field_, dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Vec<K> col = bracket(u, basis_vector(j));
            for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
        }
        return m;
    }

private:
    void build_table() {
        table_.assign(dim_ * dim_, vec_zero<K>(field_, dim_));
        for (const auto& [key, c] : sc_) {
            const auto [i, j, k] = key;
            table_[i * dim_ + j][k] = c;
            table_[j * dim_ + i][k] = -c;
        }
    }

    Field field_;
    std::size_t dim_;
    std::vector<std::string> names_;
    std::map<ScKey, K> sc_;
    std::vector<Vec<K>> table_; // dense n×n grid of bracket vectors
};

/// Jacobi cyclic sum [[u,v],w] + [[v,w],u] + [[w,u],v].
template <Scalar K>
Vec<K> jacobi_defect(const LieAlgebra<K>& L, const Vec<K>& u, const Vec<K>& v, const Vec<K>& w) {
    Vec<K> r = L.bracket(L.bracket(u, v), w);
    vec_add_inplace(r, L.bracket(L.bracket(v, w), u));
    vec_add_inplace(r, L.bracket(L.bracket(w, u), v));
    return r;
}

/// Verifies the Jacobi identity on all basis triples i < j < k, which is
/// sufficient by trilinearity (antisymmetry holds structurally).
template <Scalar K>
CheckReport<K> check_lie(const LieAlgebra<K>& L, std::size_t witness_cap = 10) {
    CheckReport<K> rep(witness_cap);
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec<K> d = L.bracket(L.basis_bracket(i, j), L.basis_vector(k));
                vec_add_inplace(d, L.bracket(L.basis_bracket(j, k), L.basis_vector(i)));
                vec_add_inplace(d, L.bracket(L.basis_bracket(k, i), L.basis_vector(j)));
                if (!vec_is_zero(d))
                    rep.add({"jacobi", "eq:jacobi",
                             {static_cast<long long>(i), static_cast<long long>(j),
                              static_cast<long long>(k)},
                             std::move(d)});
            }
    return rep;
}

/// Span of [K, G] = {[k, b_j]}, canonicalized.
template <Scalar K>
Subspace<K> ad_image(const LieAlgebra<K>& L, const Subspace<K>& sub) {
    if (sub.ambient_dim() != L.dim())
        throw InvariantError("DimensionMismatch", "ad_image: ambient dimension mismatch");
    std::vector<Vec<K>> gens;
    for (std::size_t r = 0; r < sub.dim(); ++r) {
        const Vec<K> k = sub.basis_vector(r);
        for (std::size_t j = 0; j < L.dim(); ++j)
            gens.push_back(L.bracket(k, L.basis_vector(j)));
    }
    return Subspace<K>::span_of(L.field(), L.dim(), gens);
}

template <Scalar K>
bool is_abelian_subspace(const LieAlgebra<K>& L, const Subspace<K>& sub) {
    if (sub.ambient_dim() != L.dim())
        throw InvariantError("DimensionMismatch", "is_abelian_subspace: ambient dimension mismatch");
    for (std::size_t a = 0; a < sub.dim(); ++a)
        for (std::size_t b = a + 1; b < sub.dim(); ++b)
            if (!vec_is_zero(L.bracket(sub.basis_vector(a), sub.basis_vector(b)))) return false;
    return true;
}

/// {u : [u, G] = 0}, computed as the kernel of the stacked adjoint maps.
template <Scalar K>
Subspace<K> center(const LieAlgebra<K>& L) {
    const std::size_t n = L.dim();
    Matrix<K> stacked(L.field(), n * n, n);
    // row block j holds the map u ↦ [u, b_j]; its column i is [b_i, b_j].
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const Vec<K>& br = L.basis_bracket(i, j);
            for (std::size_t k = 0; k < n; ++k) stacked.at(j * n + k, i) = br[k];
        }
    return kernel(stacked);
}

/// The derived subalgebra [G, G].
template <Scalar K>
Subspace<K> derived_subalgebra(const LieAlgebra<K>& L) {
    return ad_image(L, Subspace<K>::full(L.field(), L.dim()));
}

// ---- catalog of standard test algebras ----------------------------------

namespace detail {

/// Traceless diagonal d (Σd_i = 0) in the H_i = E_ii − E_{i+1,i+1} basis:
/// a_i = d_0 + ... + d_i.
inline std::vector<long long> diagonal_to_h_coords(const std::vector<long long>& d) {
    std::vector<long long> a(d.size() - 1, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        acc += d[i];
        a[i] = acc;
    }
    return a;
}

} // namespace detail

/// Basis order for catalog("sln", n): all E_ij with i != j in row-major
/// order, then H_1..H_{n-1} with H_i = E_ii − E_{i+1,i+1}.
inline std::size_t sln_unit_index(std::size_t n, std::size_t i, std::size_t j) {
    std::size_t idx = 0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (r == c) continue;
            if (r == i && c == j) return idx;
            ++idx;
        }
    throw InvariantError("DimensionMismatch", "sln_unit_index: diagonal index");
}

/// Named test algebras.  Basis orders are fixed:
///   sl2         = (h, e+, e−)   [h,e±] = ±2e±, [e+,e−] = h
///   heisenberg3 = (x, y, z)     [x,y] = z
///   aff2        = (x, y)        [x,y] = x
///   so3         = (e1, e2, e3)  [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2
///   sln         = matrix units then H_i, commutator constants
template <Scalar K>
LieAlgebra<K> catalog(const std::string& name, const Field& f,
                      std::optional<std::size_t> n = std::nullopt) {
    auto c = [&](long long x) { return FieldOps<K>::from_int(f, x); };
    if (name == "sl2") {
        std::map<ScKey, K> sc;
        sc[{0, 1, 1}] = c(2);
        sc[{0, 2, 2}] = c(-2);
        sc[{1, 2, 0}] = c(1);
        return LieAlgebra<K>(f, 3, {"h", "e+", "e-"}, sc);
    }
    if (name == "heisenberg3") {
        std::map<ScKey, K> sc;
        sc[{0, 1, 2}] = c(1);
        return LieAlgebra<K>(f, 3, {"x", "y", "z"}, sc);
    }
    if (name == "aff2") {
        std::map<ScKey, K> sc;
        sc[{0, 1, 0}] = c(1);
        return LieAlgebra<K>(f, 2, {"x", "y"}, sc);
    }
    if (name == "so3") {
        std::map<ScKey, K> sc;
        sc[{0, 1, 2}] = c(1);
        sc[{1, 2, 0}] = c(1);
        sc[{0, 2, 1}] = c(-1); // [e3,e1] = e2
        return LieAlgebra<K>(f, 3, {"e1", "e2", "e3"}, sc);
    }
    if (name == "sln") {
        if (!n || *n < 2)
            throw SchemaError("InvalidDimension", "catalog(sln) requires n >= 2");
        const std::size_t N = *n;
        const std::size_t dim = N * N - 1;

        // integer basis matrices, row-major N×N
        std::vector<std::vector<long long>> basis;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                if (i == j) continue;
                std::vector<long long> m(N * N, 0);
                m[i * N + j] = 1;
                basis.push_back(std::move(m));
                names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
            }
        for (std::size_t i = 0; i + 1 < N; ++i) {
            std::vector<long long> m(N * N, 0);
            m[i * N + i] = 1;
            m[(i + 1) * N + (i + 1)] = -1;
            basis.push_back(std::move(m));
            names.push_back("H" + std::to_string(i + 1));
        }

        auto coords_of = [&](const std::vector<long long>& m) {
            std::vector<long long> coord(dim, 0);
            std::size_t idx = 0;
            std::vector<long long> diag(N, 0);
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) {
                    if (i == j) continue;
                    coord[idx++] = m[i * N + j];
                }
            for (std::size_t i = 0; i < N; ++i) diag[i] = m[i * N + i];
            const auto h = detail::diagonal_to_h_coords(diag);
            for (std::size_t i = 0; i < h.size(); ++i) coord[idx + i] = h[i];
            return coord;
        };

        std::map<ScKey, K> sc;
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = a + 1; b < dim; ++b) {
                std::vector<long long> comm(N * N, 0);
                for (std::size_t i = 0; i < N; ++i)
                    for (std::size_t j = 0; j < N; ++j) {
                        long long s = 0;
                        for (std::size_t k = 0; k < N; ++k)
                            s += basis[a][i * N + k] * basis[b][k * N + j] -
                                 basis[b][i * N + k] * basis[a][k * N + j];
                        comm[i * N + j] = s;
                    }
                const auto coord = coords_of(comm);
                for (std::size_t k = 0; k < dim; ++k)
                    if (coord[k] != 0) sc[{a, b, k}] = c(coord[k]);
            }
        return LieAlgebra<K>(f, dim, std::move(names), sc);
    }
    throw SchemaError("UnknownName", "unknown catalog algebra: " + name);
}

} // namespace gdnov

#endif
