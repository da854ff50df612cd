#ifndef GDNOV_CYBE_HPP
#define GDNOV_CYBE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gdnov/enumerate.hpp"
#include "gdnov/novikov.hpp"
#include "gdnov/representations.hpp"

namespace gdnov {

/// X = Σ r_{i,j} b_i ⊗ b_j, held as its coefficient matrix.
template <Scalar K>
struct TensorElement {
    Matrix<K> r;

    explicit TensorElement(Matrix<K> coeffs) : r(std::move(coeffs)) {
        if (r.rows() != r.cols())
            throw InvariantError("DimensionMismatch", "tensor coefficient matrix must be square");
    }

    static TensorElement zero(const Field& f, std::size_t n) {
        return TensorElement(Matrix<K>(f, n, n));
    }

    std::size_t dim() const { return r.rows(); }
    const Field& field() const { return r.field(); }
    bool operator==(const TensorElement& o) const { return r == o.r; }
};

/// Element of G⊗G⊗G, dense coefficients t[(a·n + b)·n + c].
template <Scalar K>
class Tensor3 {
public:
    Tensor3(const Field& f, std::size_t n) : field_(f), n_(n), t_(n * n * n, FieldOps<K>::zero(f)) {}

    const Field& field() const { return field_; }
    std::size_t dim() const { return n_; }

    K& at(std::size_t a, std::size_t b, std::size_t c) { return t_[(a * n_ + b) * n_ + c]; }
    const K& at(std::size_t a, std::size_t b, std::size_t c) const {
        return t_[(a * n_ + b) * n_ + c];
    }

    bool is_zero() const { return vec_is_zero(t_); }
    bool operator==(const Tensor3& o) const { return n_ == o.n_ && field_ == o.field_ && t_ == o.t_; }

    Tensor3 scaled(const K& a) const {
        Tensor3 r = *this;
        for (K& x : r.t_) x = a * x;
        return r;
    }

    const std::vector<K>& flat() const { return t_; }

private:
    Field field_;
    std::size_t n_;
    std::vector<K> t_;
};

/// Three-term Yang–Baxter defect of X in G⊗G⊗G:
///   Σ r_{ij} r_{kl} ( [b_i,b_k]⊗b_j⊗b_l + b_i⊗b_k⊗[b_j,b_l] + b_i⊗[b_j,b_k]⊗b_l ).
/// The three commutators each land back in G⊗G⊗G (one bracketed leg), so no
/// enveloping-algebra machinery is needed; X solves the CYBE iff this is 0.
template <Scalar K>
Tensor3<K> cybe_defect(const LieAlgebra<K>& L, const TensorElement<K>& x) {
    require_same_field(L.field(), x.field(), "cybe_defect");
    const std::size_t n = L.dim();
    if (x.dim() != n)
        throw InvariantError("DimensionMismatch", "cybe_defect: tensor dimension mismatch");
    Tensor3<K> out(L.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const K& rij = x.r.at(i, j);
            if (rij.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const K& rkl = x.r.at(k, l);
                    if (rkl.is_zero()) continue;
                    const K coeff = rij * rkl;
                    const Vec<K>& b_ik = L.basis_bracket(i, k);
                    for (std::size_t a = 0; a < n; ++a)
                        if (!b_ik[a].is_zero()) out.at(a, j, l) += coeff * b_ik[a];
                    const Vec<K>& b_jl = L.basis_bracket(j, l);
                    for (std::size_t a = 0; a < n; ++a)
                        if (!b_jl[a].is_zero()) out.at(i, k, a) += coeff * b_jl[a];
                    const Vec<K>& b_jk = L.basis_bracket(j, k);
                    for (std::size_t a = 0; a < n; ++a)
                        if (!b_jk[a].is_zero()) out.at(i, a, l) += coeff * b_jk[a];
                }
        }
    return out;
}

/// T_X(b_i) = Σ_j r_{i,j} b_j.  Under the column convention
/// T(b_j) = Σ_i M[i][j] b_i this makes the operator matrix the TRANSPOSE of
/// the coefficient matrix; pinned by a golden test.
template <Scalar K>
LinearOperator<K> t_from_tensor(const TensorElement<K>& x) {
    return LinearOperator<K>(x.r.transposed());
}

/// Symmetric bilinear form via its Gram matrix g_{ij} = <b_i, b_j>.
template <Scalar K>
struct BilinearForm {
    Matrix<K> gram;

    explicit BilinearForm(Matrix<K> g) : gram(std::move(g)) {
        if (gram.rows() != gram.cols() || !(gram == gram.transposed()))
            throw InvariantError("NotSymmetric", "Gram matrix must be symmetric");
    }

    static BilinearForm identity(const Field& f, std::size_t n) {
        return BilinearForm(Matrix<K>::identity(f, n));
    }

    std::size_t dim() const { return gram.rows(); }
};

template <Scalar K>
bool is_orthonormal(const BilinearForm<K>& b) {
    return b.gram == Matrix<K>::identity(b.gram.field(), b.dim());
}

template <Scalar K>
struct FormReport {
    CheckReport<K> report;     // invariance defects <[b_i,b_j],b_k> − <b_i,[b_j,b_k]>
    std::size_t gram_rank = 0; // nondegenerate ⟺ gram_rank == dim
    bool nondegenerate = false;
};

/// Invariance <[u,v],w> = <u,[v,w]> over all basis triples, plus the rank of
/// the Gram matrix.
template <Scalar K>
FormReport<K> check_form_invariant(const LieAlgebra<K>& L, const BilinearForm<K>& b,
                                   std::size_t witness_cap = 10) {
    require_same_field(L.field(), b.gram.field(), "check_form_invariant");
    const std::size_t n = L.dim();
    if (b.dim() != n)
        throw InvariantError("DimensionMismatch", "check_form_invariant: dimension mismatch");

    auto pair_with_basis = [&](const Vec<K>& u, std::size_t k) {
        K acc = FieldOps<K>::zero(L.field());
        for (std::size_t i = 0; i < n; ++i)
            if (!u[i].is_zero()) acc += u[i] * b.gram.at(i, k);
        return acc;
    };

    FormReport<K> out;
    out.report = CheckReport<K>(witness_cap);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const K lhs = pair_with_basis(L.basis_bracket(i, j), k);
                const K rhs = pair_with_basis(L.basis_bracket(j, k), i);
                const K d = lhs - rhs;
                if (!d.is_zero())
                    out.report.add({"form_invariant", "eq:2.12",
                                    {static_cast<long long>(i), static_cast<long long>(j),
                                     static_cast<long long>(k)},
                                    {d}});
            }
    out.gram_rank = rref(b.gram).second;
    out.nondegenerate = out.gram_rank == n;
    return out;
}

namespace detail {

/// R^{13} on V⊗V⊗V from R on V⊗V: acts on legs 1 and 3, identity on leg 2.
template <Scalar K>
Matrix<K> embed13(const Matrix<K>& r, std::size_t d) {
    Matrix<K> out(r.field(), d * d * d, d * d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t z = 0; z < d; ++z)
            for (std::size_t xp = 0; xp < d; ++xp)
                for (std::size_t zp = 0; zp < d; ++zp) {
                    const K& v = r.at(x * d + z, xp * d + zp);
                    if (v.is_zero()) continue;
                    for (std::size_t y = 0; y < d; ++y)
                        out.at((x * d + y) * d + z, (xp * d + y) * d + zp) = v;
                }
    return out;
}

template <Scalar K>
Matrix<K> commutator(const Matrix<K>& a, const Matrix<K>& b) {
    return a * b - b * a;
}

} // namespace detail

/// R = Σ r_{ij} π(b_i)⊗π(b_j) on V⊗V.
template <Scalar K>
Matrix<K> rep_r_matrix(const Representation<K>& rep, const TensorElement<K>& x) {
    if (rep.algebra_dim() != x.dim())
        throw InvariantError("DimensionMismatch", "rep_r_matrix: dimension mismatch");
    const std::size_t d = rep.target_dim();
    Matrix<K> r(rep.field(), d * d, d * d);
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < x.dim(); ++j) {
            const K& c = x.r.at(i, j);
            if (c.is_zero()) continue;
            r = r + Matrix<K>::kronecker(rep.image(i), rep.image(j)).scaled(c);
        }
    return r;
}

/// [R^{12},R^{13}] + [R^{13},R^{23}] + [R^{12},R^{23}] on V⊗V⊗V, with
/// R^{12} = R⊗I, R^{23} = I⊗R and R^{13} acting on the outer legs.
template <Scalar K>
Matrix<K> rep_defect(const Representation<K>& rep, const TensorElement<K>& x) {
    const std::size_t d = rep.target_dim();
    const Matrix<K> r = rep_r_matrix(rep, x);
    const Matrix<K> id = Matrix<K>::identity(rep.field(), d);
    const Matrix<K> r12 = Matrix<K>::kronecker(r, id);
    const Matrix<K> r23 = Matrix<K>::kronecker(id, r);
    const Matrix<K> r13 = detail::embed13(r, d);
    Matrix<K> out = detail::commutator(r12, r13);
    out = out + detail::commutator(r13, r23);
    out = out + detail::commutator(r12, r23);
    return out;
}

/// (π⊗π⊗π) applied to an element of G⊗G⊗G, as a matrix on V⊗V⊗V.
template <Scalar K>
Matrix<K> tensor3_image(const Representation<K>& rep, const Tensor3<K>& t) {
    if (rep.algebra_dim() != t.dim())
        throw InvariantError("DimensionMismatch", "tensor3_image: dimension mismatch");
    const std::size_t n = t.dim(), d = rep.target_dim();
    Matrix<K> out(rep.field(), d * d * d, d * d * d);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const K& v = t.at(a, b, c);
                if (v.is_zero()) continue;
                const Matrix<K> kk =
                    Matrix<K>::kronecker(Matrix<K>::kronecker(rep.image(a), rep.image(b)),
                                         rep.image(c));
                out = out + kk.scaled(v);
            }
    return out;
}

/// Exhaustive audit over GF(p): for every tensor X, whether the tensor-form
/// defect vanishes and whether T_X is an R-matrix, plus the hard internal
/// consistency gate rep_defect = (π⊗π⊗π)(cybe_defect) on the adjoint
/// representation.  The two solution classes are reported, not reconciled.
template <Scalar K>
struct AuditReport {
    std::uint32_t p = 0;
    std::size_t dim = 0;
    std::uint64_t total = 0;
    std::uint64_t cybe_solutions = 0;
    std::uint64_t rmatrix_solutions = 0;
    std::uint64_t both = 0;
    std::vector<Matrix<K>> only_cybe;
    std::vector<Matrix<K>> only_rmatrix;
    std::vector<Matrix<K>> consistency_failures; // must stay empty
};

template <Scalar K>
AuditReport<K> cybe_audit(const LieAlgebra<K>& L, const BilinearForm<K>& b,
                          std::uint64_t cap = (1u << 24)) {
    if (L.field().kind() != Field::Kind::prime)
        throw InvariantError("NotFiniteField", "cybe_audit enumerates over a prime field");
    if (!is_orthonormal(b))
        throw InvariantError("NotOrthonormal", "cybe_audit requires the orthonormal Gram matrix");
    const auto form = check_form_invariant(L, b, 1);
    if (!form.report.passed)
        throw InvariantError("NotInvariant", "the bilinear form is not invariant");

    const std::size_t n = L.dim();
    AuditReport<K> out;
    out.p = L.field().modulus();
    out.dim = n;
    out.total = finite_matrix_count(L.field(), n * n, cap);

    const Representation<K> adj = adjoint_rep(L);
    for_each_matrix<K>(L.field(), n, n, cap, [&](const Matrix<K>& m) {
        const TensorElement<K> x(m);
        const Tensor3<K> defect = cybe_defect(L, x);
        const bool cybe_zero = defect.is_zero();
        const bool rmx = check_rmatrix(L, t_from_tensor(x), 1).passed;
        if (cybe_zero) ++out.cybe_solutions;
        if (rmx) ++out.rmatrix_solutions;
        if (cybe_zero && rmx) ++out.both;
        if (cybe_zero && !rmx) out.only_cybe.push_back(m);
        if (rmx && !cybe_zero) out.only_rmatrix.push_back(m);
        if (!(rep_defect(adj, x) == tensor3_image(adj, defect)))
            out.consistency_failures.push_back(m);
    });
    return out;
}

} // namespace gdnov

#endif
