#ifndef GDNOV_REPRESENTATIONS_HPP
#define GDNOV_REPRESENTATIONS_HPP

#include <utility>
#include <vector>

#include "gdnov/lie_algebra.hpp"

namespace gdnov {

/// A G-module given by one d×d matrix per basis element.  The homomorphism
/// property π([b_i,b_j]) = π(b_i)π(b_j) − π(b_j)π(b_i) is checked at
/// construction.
template <Scalar K>
class Representation {
public:
    Representation(const LieAlgebra<K>& L, std::vector<Matrix<K>> images)
        : field_(L.field()), dim_(L.dim()), pi_(std::move(images)) {
        if (pi_.size() != dim_)
            throw InvariantError("DimensionMismatch", "one image matrix per basis element required");
        target_ = pi_.empty() ? 0 : pi_[0].rows();
        for (const auto& m : pi_) {
            require_same_field(m.field(), field_, "Representation");
            if (m.rows() != target_ || m.cols() != target_)
                throw InvariantError("DimensionMismatch", "representation matrices must be square and equally sized");
        }
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) {
                Matrix<K> lhs(field_, target_, target_);
                const Vec<K>& br = L.basis_bracket(i, j);
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!br[k].is_zero()) lhs = lhs + pi_[k].scaled(br[k]);
                const Matrix<K> rhs = pi_[i] * pi_[j] - pi_[j] * pi_[i];
                if (!(lhs == rhs))
                    throw InvariantError("NotRepresentation",
                                         "images violate the homomorphism property at basis pair (" +
                                             std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }

    const Field& field() const { return field_; }
    std::size_t algebra_dim() const { return dim_; }
    std::size_t target_dim() const { return target_; }
    const Matrix<K>& image(std::size_t i) const { return pi_[i]; }

private:
    Field field_;
    std::size_t dim_;
    std::size_t target_;
    std::vector<Matrix<K>> pi_;
};

/// Adjoint representation: π(b_i) = ad_{b_i}.
template <Scalar K>
Representation<K> adjoint_rep(const LieAlgebra<K>& L) {
    std::vector<Matrix<K>> images;
    images.reserve(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) {
        Matrix<K> m(L.field(), L.dim(), L.dim());
        for (std::size_t j = 0; j < L.dim(); ++j) {
            const Vec<K>& col = L.basis_bracket(i, j);
            for (std::size_t r = 0; r < L.dim(); ++r) m.at(r, j) = col[r];
        }
        images.push_back(std::move(m));
    }
    return Representation<K>(L, std::move(images));
}

/// Defining (n-dimensional) representation of catalog("sln", n), matching
/// its basis order: matrix units E_ij then H_i = E_ii − E_{i+1,i+1}.
template <Scalar K>
Representation<K> sln_defining_rep(const LieAlgebra<K>& L, std::size_t n) {
    const Field& f = L.field();
    std::vector<Matrix<K>> images;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Matrix<K> m(f, n, n);
            m.at(i, j) = FieldOps<K>::one(f);
            images.push_back(std::move(m));
        }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Matrix<K> m(f, n, n);
        m.at(i, i) = FieldOps<K>::one(f);
        m.at(i + 1, i + 1) = FieldOps<K>::from_int(f, -1);
        images.push_back(std::move(m));
    }
    return Representation<K>(L, std::move(images));
}

/// Defining 2-dimensional representation of catalog("sl2") in its (h,e+,e−)
/// order: h ↦ diag(1,−1), e+ ↦ E12, e− ↦ E21.
template <Scalar K>
Representation<K> sl2_defining_rep(const LieAlgebra<K>& L) {
    const Field& f = L.field();
    Matrix<K> h(f, 2, 2), ep(f, 2, 2), em(f, 2, 2);
    h.at(0, 0) = FieldOps<K>::one(f);
    h.at(1, 1) = FieldOps<K>::from_int(f, -1);
    ep.at(0, 1) = FieldOps<K>::one(f);
    em.at(1, 0) = FieldOps<K>::one(f);
    return Representation<K>(L, {std::move(h), std::move(ep), std::move(em)});
}

} // namespace gdnov

#endif
