#ifndef GDNOV_NOVIKOV_HPP
#define GDNOV_NOVIKOV_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gdnov/lie_algebra.hpp"

namespace gdnov {

/// Endomorphism of the algebra's underlying space.  Column convention:
/// T(b_j) = Σ_i M[i][j] b_i.
template <Scalar K>
class LinearOperator {
public:
    explicit LinearOperator(Matrix<K> m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols())
            throw InvariantError("DimensionMismatch", "operator matrix must be square");
    }

    static LinearOperator zero(const Field& f, std::size_t n) {
        return LinearOperator(Matrix<K>(f, n, n));
    }

    static LinearOperator identity(const Field& f, std::size_t n) {
        return LinearOperator(Matrix<K>::identity(f, n));
    }

    std::size_t dim() const { return m_.rows(); }
    const Field& field() const { return m_.field(); }
    const Matrix<K>& matrix() const { return m_; }

    Vec<K> apply(const Vec<K>& v) const { return m_.apply(v); }
    Vec<K> apply_basis(std::size_t j) const { return m_.col(j); }
    LinearOperator squared() const { return LinearOperator(m_ * m_); }

    bool operator==(const LinearOperator& o) const { return m_ == o.m_; }

private:
    Matrix<K> m_;
};

/// Bilinear product b_i ∘ b_j = Σ_k d_{ij}^k b_k.  All ordered pairs are
/// stored; no symmetry is assumed.
template <Scalar K>
class BilinearProduct {
public:
    BilinearProduct(const Field& f, std::size_t dim, const std::map<ScKey, K>& constants)
        : field_(f), dim_(dim) {
        for (const auto& [key, c] : constants) {
            const auto [i, j, k] = key;
            if (i >= dim_ || j >= dim_ || k >= dim_)
                throw SchemaError("BadProductConstants", "product constant index out of range");
            if (!c.is_zero()) d_[key] = c;
        }
        build_table();
    }

    static BilinearProduct zero(const Field& f, std::size_t dim) {
        return BilinearProduct(f, dim, {});
    }

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::map<ScKey, K>& constants() const { return d_; }

    /// b_i ∘ b_j as a coordinate vector.
    const Vec<K>& basis_product(std::size_t i, std::size_t j) const {
        return table_[i * dim_ + j];
    }

    Vec<K> eval(const Vec<K>& u, const Vec<K>& v) const {
        if (u.size() != dim_ || v.size() != dim_)
            throw InvariantError("DimensionMismatch", "product: vector length mismatch");
        Vec<K> r = vec_zero<K>(field_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (v[j].is_zero()) continue;
                vec_axpy(r, u[i] * v[j], basis_product(i, j));
            }
        }
        return r;
    }

    /// u ∘ b_k
    Vec<K> eval_right_basis(const Vec<K>& u, std::size_t k) const {
        Vec<K> r = vec_zero<K>(field_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            if (!u[i].is_zero()) vec_axpy(r, u[i], basis_product(i, k));
        return r;
    }

    /// b_i ∘ v
    Vec<K> eval_left_basis(std::size_t i, const Vec<K>& v) const {
        Vec<K> r = vec_zero<K>(field_, dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) vec_axpy(r, v[j], basis_product(i, j));
        return r;
    }

    /// Copy with one constant replaced (handy for perturbation experiments).
    BilinearProduct with_entry(std::size_t i, std::size_t j, std::size_t k, const K& c) const {
        std::map<ScKey, K> d = d_;
        if (c.is_zero())
            d.erase({i, j, k});
        else
            d[{i, j, k}] = c;
        return BilinearProduct(field_, dim_, d);
    }

    bool is_zero() const { return d_.empty(); }
    bool operator==(const BilinearProduct& o) const {
        return dim_ == o.dim_ && field_ == o.field_ && d_ == o.d_;
    }

private:
    void build_table() {
        table_.assign(dim_ * dim_, vec_zero<K>(field_, dim_));
        for (const auto& [key, c] : d_) {
            const auto [i, j, k] = key;
            table_[i * dim_ + j][k] = c;
        }
    }

    Field field_;
    std::size_t dim_;
    std::map<ScKey, K> d_;
    std::vector<Vec<K>> table_;
};

template <Scalar K>
void require_compatible(const LieAlgebra<K>& L, const LinearOperator<K>& T, const char* where) {
    require_same_field(L.field(), T.field(), where);
    if (L.dim() != T.dim())
        throw InvariantError("DimensionMismatch", std::string(where) + ": dimension mismatch");
}

template <Scalar K>
void require_compatible(const LieAlgebra<K>& L, const BilinearProduct<K>& P, const char* where) {
    require_same_field(L.field(), P.field(), where);
    if (L.dim() != P.dim())
        throw InvariantError("DimensionMismatch", std::string(where) + ": dimension mismatch");
}

// ---- vector-level defects (used by checks and by property tests) ---------

/// [T(u),T(v)] − T([T(u),v]) − T([u,T(v)])
template <Scalar K>
Vec<K> rmatrix_defect(const LieAlgebra<K>& L, const LinearOperator<K>& T, const Vec<K>& u,
                      const Vec<K>& v) {
    const Vec<K> tu = T.apply(u), tv = T.apply(v);
    Vec<K> r = L.bracket(tu, tv);
    vec_sub_inplace(r, T.apply(L.bracket(tu, v)));
    vec_sub_inplace(r, T.apply(L.bracket(u, tv)));
    return r;
}

/// T([u,T(v)]) − [u,T²(v)]
template <Scalar K>
Vec<K> strong_defect(const LieAlgebra<K>& L, const LinearOperator<K>& T, const Vec<K>& u,
                     const Vec<K>& v) {
    const Vec<K> tv = T.apply(v);
    Vec<K> r = T.apply(L.bracket(u, tv));
    vec_sub_inplace(r, L.bracket(u, T.apply(tv)));
    return r;
}

/// (u∘v)∘w − u∘(v∘w) − (v∘u)∘w + v∘(u∘w)
template <Scalar K>
Vec<K> left_symmetric_defect(const BilinearProduct<K>& P, const Vec<K>& u, const Vec<K>& v,
                             const Vec<K>& w) {
    Vec<K> r = P.eval(P.eval(u, v), w);
    vec_sub_inplace(r, P.eval(u, P.eval(v, w)));
    vec_sub_inplace(r, P.eval(P.eval(v, u), w));
    vec_add_inplace(r, P.eval(v, P.eval(u, w)));
    return r;
}

/// (u∘v)∘w − (u∘w)∘v
template <Scalar K>
Vec<K> right_commutative_defect(const BilinearProduct<K>& P, const Vec<K>& u, const Vec<K>& v,
                                const Vec<K>& w) {
    Vec<K> r = P.eval(P.eval(u, v), w);
    vec_sub_inplace(r, P.eval(P.eval(u, w), v));
    return r;
}

/// [w,u]∘v − [w,v]∘u + [w∘u,v] − [w∘v,u] − w∘[u,v]
template <Scalar K>
Vec<K> compat_defect(const LieAlgebra<K>& L, const BilinearProduct<K>& P, const Vec<K>& w,
                     const Vec<K>& u, const Vec<K>& v) {
    Vec<K> r = P.eval(L.bracket(w, u), v);
    vec_sub_inplace(r, P.eval(L.bracket(w, v), u));
    vec_add_inplace(r, L.bracket(P.eval(w, u), v));
    vec_sub_inplace(r, L.bracket(P.eval(w, v), u));
    vec_sub_inplace(r, P.eval(w, L.bracket(u, v)));
    return r;
}

// ---- checks over basis tuples (complete by multilinearity) ---------------

/// Classical R-matrix condition on all basis pairs i < j.
template <Scalar K>
CheckReport<K> check_rmatrix(const LieAlgebra<K>& L, const LinearOperator<K>& T,
                             std::size_t witness_cap = 10) {
    require_compatible(L, T, "check_rmatrix");
    CheckReport<K> rep(witness_cap);
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec<K> ti = T.apply_basis(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec<K> tj = T.apply_basis(j);
            Vec<K> d = L.bracket(ti, tj);
            vec_sub_inplace(d, T.apply(L.bracket_right_basis(ti, j)));
            vec_sub_inplace(d, T.apply(L.bracket_left_basis(i, tj)));
            if (!vec_is_zero(d))
                rep.add({"rmatrix", "eq:1.7",
                         {static_cast<long long>(i), static_cast<long long>(j)}, std::move(d)});
        }
    }
    return rep;
}

/// Strong condition T([u,T(v)]) = [u,T²(v)] on all ordered basis pairs.
/// Equivalent formulation: T([u,v]) = [u,T(v)] for v in the image of T;
/// substituting v = T(w) shows both readings are one computation.
template <Scalar K>
CheckReport<K> check_strong(const LieAlgebra<K>& L, const LinearOperator<K>& T,
                            std::size_t witness_cap = 10) {
    require_compatible(L, T, "check_strong");
    CheckReport<K> rep(witness_cap);
    const std::size_t n = L.dim();
    const LinearOperator<K> T2 = T.squared();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> d = T.apply(L.bracket_left_basis(i, T.apply_basis(j)));
            vec_sub_inplace(d, L.bracket_left_basis(i, T2.apply_basis(j)));
            if (!vec_is_zero(d))
                rep.add({"strong", "eq:1.8",
                         {static_cast<long long>(i), static_cast<long long>(j)}, std::move(d)});
        }
    return rep;
}

/// u∘v = T([u,v]) − [T(u),v].  No condition on T: the compatibility identity
/// holds for arbitrary T (check_compat is the tested theorem, not an input
/// restriction here).
template <Scalar K>
BilinearProduct<K> product_from_operator(const LieAlgebra<K>& L, const LinearOperator<K>& T) {
    require_compatible(L, T, "product_from_operator");
    const std::size_t n = L.dim();
    std::map<ScKey, K> d;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec<K> ti = T.apply_basis(i);
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> val = T.apply(L.basis_bracket(i, j));
            vec_sub_inplace(val, L.bracket_right_basis(ti, j));
            for (std::size_t k = 0; k < n; ++k)
                if (!val[k].is_zero()) d[{i, j, k}] = val[k];
        }
    }
    return BilinearProduct<K>(L.field(), n, d);
}

template <Scalar K>
CheckReport<K> check_left_symmetric(const BilinearProduct<K>& P, std::size_t witness_cap = 10) {
    CheckReport<K> rep(witness_cap);
    const std::size_t n = P.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<K> d = P.eval_right_basis(P.basis_product(i, j), k);
                vec_sub_inplace(d, P.eval_left_basis(i, P.basis_product(j, k)));
                vec_sub_inplace(d, P.eval_right_basis(P.basis_product(j, i), k));
                vec_add_inplace(d, P.eval_left_basis(j, P.basis_product(i, k)));
                if (!vec_is_zero(d))
                    rep.add({"left_symmetric", "eq:1.1",
                             {static_cast<long long>(i), static_cast<long long>(j),
                              static_cast<long long>(k)},
                             std::move(d)});
            }
    return rep;
}

template <Scalar K>
CheckReport<K> check_right_commutative(const BilinearProduct<K>& P, std::size_t witness_cap = 10) {
    CheckReport<K> rep(witness_cap);
    const std::size_t n = P.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec<K> d = P.eval_right_basis(P.basis_product(i, j), k);
                vec_sub_inplace(d, P.eval_right_basis(P.basis_product(i, k), j));
                if (!vec_is_zero(d))
                    rep.add({"right_commutative", "eq:1.2",
                             {static_cast<long long>(i), static_cast<long long>(j),
                              static_cast<long long>(k)},
                             std::move(d)});
            }
    return rep;
}

/// Five-term compatibility defect over all ordered basis triples (w,u,v).
template <Scalar K>
CheckReport<K> check_compat(const LieAlgebra<K>& L, const BilinearProduct<K>& P,
                            std::size_t witness_cap = 10) {
    require_compatible(L, P, "check_compat");
    CheckReport<K> rep(witness_cap);
    const std::size_t n = L.dim();
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                Vec<K> d = P.eval_right_basis(L.basis_bracket(w, u), v);
                vec_sub_inplace(d, P.eval_right_basis(L.basis_bracket(w, v), u));
                vec_add_inplace(d, L.bracket_right_basis(P.basis_product(w, u), v));
                vec_sub_inplace(d, L.bracket_right_basis(P.basis_product(w, v), u));
                vec_sub_inplace(d, P.eval_left_basis(w, L.basis_bracket(u, v)));
                if (!vec_is_zero(d))
                    rep.add({"gd_compat", "eq:1.4",
                             {static_cast<long long>(w), static_cast<long long>(u),
                              static_cast<long long>(v)},
                             std::move(d)});
            }
    return rep;
}

/// Commutator algebra [u,v] = u∘v − v∘u.  Not validated: run check_lie on
/// the result (it is a Lie algebra whenever P is left-symmetric).
template <Scalar K>
LieAlgebra<K> commutator_algebra(const BilinearProduct<K>& P) {
    const std::size_t n = P.dim();
    std::map<ScKey, K> sc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec<K>& dij = P.basis_product(i, j);
            const Vec<K>& dji = P.basis_product(j, i);
            for (std::size_t k = 0; k < n; ++k) {
                const K c = dij[k] - dji[k];
                if (!c.is_zero()) sc[{i, j, k}] = c;
            }
        }
    return LieAlgebra<K>(P.field(), n, {}, sc);
}

/// Conjunction of check_lie, check_left_symmetric, check_right_commutative
/// and check_compat; sub-witnesses keep their axiom tags.
template <Scalar K>
CheckReport<K> check_gd(const LieAlgebra<K>& L, const BilinearProduct<K>& P,
                        std::size_t witness_cap = 10) {
    require_compatible(L, P, "check_gd");
    CheckReport<K> rep(witness_cap);
    rep.absorb(check_lie(L, witness_cap));
    rep.absorb(check_left_symmetric(P, witness_cap));
    rep.absorb(check_right_commutative(P, witness_cap));
    rep.absorb(check_compat(L, P, witness_cap));
    return rep;
}

/// Lie bracket and Novikov product on one space, compatible in the
/// Gel'fand-Dorfman sense.  `validated` enforces all four axiom families;
/// `unchecked` builds the raw pairing for negative tests.
template <Scalar K>
class GDBialgebra {
public:
    static GDBialgebra validated(LieAlgebra<K> lie, BilinearProduct<K> prod) {
        const auto rep = check_gd(lie, prod, 1);
        if (!rep.passed)
            throw InvariantError("GdAxiomsViolated",
                                 "axiom " + rep.witnesses.at(0).axiom + " (" +
                                     rep.witnesses.at(0).eq + ") fails; " +
                                     std::to_string(rep.witness_count) + " witness(es)");
        return GDBialgebra(std::move(lie), std::move(prod));
    }

    static GDBialgebra unchecked(LieAlgebra<K> lie, BilinearProduct<K> prod) {
        require_compatible(lie, prod, "GDBialgebra");
        return GDBialgebra(std::move(lie), std::move(prod));
    }

    const LieAlgebra<K>& lie() const { return lie_; }
    const BilinearProduct<K>& product() const { return prod_; }

private:
    GDBialgebra(LieAlgebra<K> lie, BilinearProduct<K> prod)
        : lie_(std::move(lie)), prod_(std::move(prod)) {}

    LieAlgebra<K> lie_;
    BilinearProduct<K> prod_;
};

} // namespace gdnov

#endif
