#ifndef GDNOV_SUBSPACE_HPP
#define GDNOV_SUBSPACE_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "gdnov/matrix.hpp"

namespace gdnov {

/// Linear subspace of F^n in canonical form: the basis matrix is the RREF of
/// any spanning set with zero rows dropped.  Equal subspaces therefore have
/// identical representations.
template <Scalar K>
class Subspace {
public:
    static Subspace zero(const Field& f, std::size_t ambient) {
        return Subspace(ambient, Matrix<K>(f, 0, ambient));
    }

    static Subspace full(const Field& f, std::size_t ambient) {
        return Subspace(ambient, Matrix<K>::identity(f, ambient));
    }

    /// Canonicalizes an arbitrary spanning set given as matrix rows.
    static Subspace row_span(const Matrix<K>& spanning) {
        auto [r, rank] = rref(spanning);
        Matrix<K> basis(r.field(), rank, r.cols());
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < r.cols(); ++j) basis.at(i, j) = r.at(i, j);
        return Subspace(r.cols(), std::move(basis));
    }

    static Subspace span_of(const Field& f, std::size_t ambient, const std::vector<Vec<K>>& vectors) {
        if (vectors.empty()) return zero(f, ambient);
        return row_span(Matrix<K>::from_rows(f, vectors));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix<K>& basis() const { return basis_; }
    const Field& field() const { return basis_.field(); }
    Vec<K> basis_vector(std::size_t i) const { return basis_.row(i); }

    std::vector<std::size_t> pivots() const { return pivot_columns(basis_, basis_.rows()); }

    bool contains(const Vec<K>& v) const {
        if (v.size() != ambient_)
            throw InvariantError("DimensionMismatch", "Subspace::contains: vector length mismatch");
        Vec<K> w = v;
        const auto piv = pivots();
        for (std::size_t i = 0; i < piv.size(); ++i) {
            const K c = w[piv[i]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j) w[j] -= c * basis_.at(i, j);
        }
        return vec_is_zero(w);
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    Subspace(std::size_t ambient, Matrix<K> basis) : ambient_(ambient), basis_(std::move(basis)) {}

    std::size_t ambient_;
    Matrix<K> basis_;
};

/// Basis of the right null space {v : m v = 0}, canonicalized.
template <Scalar K>
Subspace<K> kernel(const Matrix<K>& m) {
    const Field& f = m.field();
    const std::size_t n = m.cols();
    auto [r, rank] = rref(m);
    const auto piv = pivot_columns(r, rank);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : piv) is_pivot[p] = true;

    std::vector<Vec<K>> gens;
    for (std::size_t fcol = 0; fcol < n; ++fcol) {
        if (is_pivot[fcol]) continue;
        Vec<K> v = vec_zero<K>(f, n);
        v[fcol] = FieldOps<K>::one(f);
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, fcol);
        gens.push_back(std::move(v));
    }
    return Subspace<K>::span_of(f, n, gens);
}

template <Scalar K>
void require_same_ambient(const Subspace<K>& a, const Subspace<K>& b, const char* where) {
    require_same_field(a.field(), b.field(), where);
    if (a.ambient_dim() != b.ambient_dim())
        throw InvariantError("DimensionMismatch", std::string(where) + ": ambient dimension mismatch");
}

template <Scalar K>
Subspace<K> subspace_sum(const Subspace<K>& a, const Subspace<K>& b) {
    require_same_ambient(a, b, "subspace_sum");
    const std::size_t n = a.ambient_dim();
    Matrix<K> stacked(a.field(), a.dim() + b.dim(), n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) stacked.at(i, j) = a.basis().at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) stacked.at(a.dim() + i, j) = b.basis().at(i, j);
    return Subspace<K>::row_span(stacked);
}

/// a ∩ b via the kernel of [aᵀ | −bᵀ]: a kernel vector (x, y) certifies
/// Σ xᵢaᵢ = Σ yⱼbⱼ, and those common values span the intersection.
template <Scalar K>
Subspace<K> subspace_intersect(const Subspace<K>& a, const Subspace<K>& b) {
    require_same_ambient(a, b, "subspace_intersect");
    const Field& f = a.field();
    const std::size_t n = a.ambient_dim();
    const std::size_t da = a.dim(), db = b.dim();
    if (da == 0 || db == 0) return Subspace<K>::zero(f, n);

    Matrix<K> sys(f, n, da + db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < n; ++j) sys.at(j, i) = a.basis().at(i, j);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < n; ++j) sys.at(j, da + i) = -b.basis().at(i, j);

    const Subspace<K> ker = kernel(sys);
    std::vector<Vec<K>> gens;
    for (std::size_t g = 0; g < ker.dim(); ++g) {
        const Vec<K> xy = ker.basis_vector(g);
        Vec<K> v = vec_zero<K>(f, n);
        for (std::size_t i = 0; i < da; ++i)
            vec_axpy(v, xy[i], a.basis().row(i));
        gens.push_back(std::move(v));
    }
    return Subspace<K>::span_of(f, n, gens);
}

/// Deterministic direct complement: the span of the standard basis vectors
/// at the non-pivot columns of a's canonical basis.
template <Scalar K>
Subspace<K> complement(const Subspace<K>& a) {
    const Field& f = a.field();
    const std::size_t n = a.ambient_dim();
    const auto piv = a.pivots();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : piv) is_pivot[p] = true;
    std::vector<Vec<K>> gens;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vec<K> e = vec_zero<K>(f, n);
        e[j] = FieldOps<K>::one(f);
        gens.push_back(std::move(e));
    }
    return Subspace<K>::span_of(f, n, gens);
}

} // namespace gdnov

#endif
