#ifndef GDNOV_AFFINE_HPP
#define GDNOV_AFFINE_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gdnov/novikov.hpp"

namespace gdnov {

/// Element of A ⊗ F[t, t⁻¹]: a finite map degree ↦ coefficient vector.
/// Zero coefficient vectors are never stored.
template <Scalar K>
class LoopElement {
public:
    LoopElement(const Field& f, std::size_t dim) : field_(f), dim_(dim) {}

    static LoopElement pure(const Field& f, std::size_t dim, long long degree, Vec<K> coeffs) {
        LoopElement e(f, dim);
        e.add_term(degree, coeffs);
        return e;
    }

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::map<long long, Vec<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(long long degree, const Vec<K>& coeffs) {
        if (coeffs.size() != dim_)
            throw InvariantError("DimensionMismatch", "loop term coefficient length mismatch");
        if (degree > (1ll << 31) || degree < -(1ll << 31))
            throw SchemaError("DegreeOutOfRange", "|degree| must stay within 2^31");
        if (vec_is_zero(coeffs)) return;
        auto it = terms_.find(degree);
        if (it == terms_.end()) {
            terms_.emplace(degree, coeffs);
            return;
        }
        vec_add_inplace(it->second, coeffs);
        if (vec_is_zero(it->second)) terms_.erase(it);
    }

    LoopElement operator+(const LoopElement& o) const {
        LoopElement r = *this;
        for (const auto& [deg, v] : o.terms_) r.add_term(deg, v);
        return r;
    }

    LoopElement negated() const {
        LoopElement r(field_, dim_);
        for (const auto& [deg, v] : terms_) r.terms_.emplace(deg, vec_neg(v));
        return r;
    }

    bool operator==(const LoopElement& o) const {
        return dim_ == o.dim_ && field_ == o.field_ && terms_ == o.terms_;
    }

private:
    Field field_;
    std::size_t dim_;
    std::map<long long, Vec<K>> terms_;
};

/// [u⊗tʲ, v⊗tᵏ] = [u,v]⊗t^{j+k} + j·(u∘v)⊗t^{j+k−1} − k·(v∘u)⊗t^{j+k−1},
/// extended bilinearly.  The integer degrees j,k act through the canonical
/// ring map into the field, so over GF(p) degrees congruent mod p scale
/// identically.
template <Scalar K>
LoopElement<K> loop_bracket(const LieAlgebra<K>& L, const BilinearProduct<K>& P,
                            const LoopElement<K>& a, const LoopElement<K>& b) {
    require_compatible(L, P, "loop_bracket");
    require_same_field(L.field(), a.field(), "loop_bracket");
    require_same_field(L.field(), b.field(), "loop_bracket");
    if (a.dim() != L.dim() || b.dim() != L.dim())
        throw InvariantError("DimensionMismatch", "loop_bracket: dimension mismatch");

    LoopElement<K> out(L.field(), L.dim());
    for (const auto& [j, u] : a.terms())
        for (const auto& [k, v] : b.terms()) {
            out.add_term(j + k, L.bracket(u, v));
            const K jc = FieldOps<K>::from_int(L.field(), j);
            const K kc = FieldOps<K>::from_int(L.field(), k);
            if (!jc.is_zero()) out.add_term(j + k - 1, vec_scale(jc, P.eval(u, v)));
            if (!kc.is_zero()) out.add_term(j + k - 1, vec_scale(-kc, P.eval(v, u)));
        }
    return out;
}

template <Scalar K>
LoopElement<K> loop_bracket(const GDBialgebra<K>& g, const LoopElement<K>& a,
                            const LoopElement<K>& b) {
    return loop_bracket(g.lie(), g.product(), a, b);
}

/// Jacobi cyclic sum of three windowed pure tensors, evaluated with plain
/// loop_bracket calls.  Reference route; the optimized checker below must
/// agree with it tuple by tuple.
template <Scalar K>
LoopElement<K> affine_jacobi_defect(const LieAlgebra<K>& L, const BilinearProduct<K>& P,
                                    std::size_t i, long long a, std::size_t k, long long b,
                                    std::size_t m, long long c) {
    const auto pure = [&](std::size_t idx, long long d) {
        return LoopElement<K>::pure(L.field(), L.dim(), d, L.basis_vector(idx));
    };
    const LoopElement<K> x = pure(i, a), y = pure(k, b), z = pure(m, c);
    return loop_bracket(L, P, loop_bracket(L, P, x, y), z) +
           loop_bracket(L, P, loop_bracket(L, P, y, z), x) +
           loop_bracket(L, P, loop_bracket(L, P, z, x), y);
}

/// Skew-symmetry and Jacobi for the loop bracket over all windowed pure
/// tensors: basis indices i ≤ k (≤ m), degrees in [−window, window].
/// Witness index tuples interleave indices and degrees,
/// (i, deg_i, k, deg_k, m, deg_m, defect_degree), one witness per nonzero
/// degree slice of a defect.
///
/// For a pure triple bi⊗tᵃ, bk⊗tᵇ, bm⊗tᶜ the Jacobi defect lives in the
/// degrees a+b+c, a+b+c−1, a+b+c−2, and collecting the bracket/product
/// constituents shows the three slices are
///     ch0  (degree-independent),
///     ch1 = a·Wa + b·Wb + c·Wc,
///     ch2 = a²·Uaa + b²·Ubb + c²·Ucc + ab·Uab + ac·Uac + bc·Ubc
///           − a·Uaa − b·Ubb − c·Ucc,
/// with all capital vectors independent of degrees.  When every constituent
/// vanishes the defect is zero for every window, so the degree loop is
/// skipped; otherwise each windowed tuple is evaluated and reported.
template <Scalar K>
CheckReport<K> check_affine_jacobi(const LieAlgebra<K>& L, const BilinearProduct<K>& P,
                                   std::size_t window, std::size_t witness_cap = 10) {
    require_compatible(L, P, "check_affine_jacobi");
    if (window < 1) throw SchemaError("InvalidWindow", "window must be >= 1");
    CheckReport<K> rep(witness_cap);
    const std::size_t n = L.dim();
    const Field& f = L.field();
    const long long w = static_cast<long long>(window);

    // skew-symmetry: [x,y] + [y,x] = ([b_i,b_k] + [b_k,b_i]) ⊗ t^{deg sum};
    // the product channel cancels identically, so only the bracket part can
    // fail, independently of degrees.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i; k < n; ++k) {
            Vec<K> s = L.basis_bracket(i, k);
            vec_add_inplace(s, L.basis_bracket(k, i));
            if (vec_is_zero(s)) continue;
            for (long long dj = -w; dj <= w; ++dj)
                for (long long dl = -w; dl <= w; ++dl)
                    rep.add({"affine_skew", "eq:1.11",
                             {static_cast<long long>(i), dj, static_cast<long long>(k), dl,
                              dj + dl},
                             s});
        }

    auto scalar_of = [&](long long v) { return FieldOps<K>::from_int(f, v); };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i; k < n; ++k)
            for (std::size_t m = k; m < n; ++m) {
                const Vec<K>& b_ik = L.basis_bracket(i, k);
                const Vec<K>& b_km = L.basis_bracket(k, m);
                const Vec<K>& b_mi = L.basis_bracket(m, i);
                const Vec<K>& p_ik = P.basis_product(i, k);
                const Vec<K>& p_ki = P.basis_product(k, i);
                const Vec<K>& p_km = P.basis_product(k, m);
                const Vec<K>& p_mk = P.basis_product(m, k);
                const Vec<K>& p_mi = P.basis_product(m, i);
                const Vec<K>& p_im = P.basis_product(i, m);

                // degree-independent slice: plain Jacobi
                Vec<K> ch0 = L.bracket_right_basis(b_ik, m);
                vec_add_inplace(ch0, L.bracket_right_basis(b_km, i));
                vec_add_inplace(ch0, L.bracket_right_basis(b_mi, k));

                // linear slice coefficients
                Vec<K> wa = P.eval_right_basis(b_ik, m);
                vec_add_inplace(wa, P.eval_right_basis(b_mi, k));
                vec_sub_inplace(wa, P.eval_left_basis(i, b_km));
                vec_add_inplace(wa, L.bracket_right_basis(p_ik, m));
                vec_sub_inplace(wa, L.bracket_right_basis(p_im, k));

                Vec<K> wb = P.eval_right_basis(b_ik, m);
                vec_add_inplace(wb, P.eval_right_basis(b_km, i));
                vec_sub_inplace(wb, P.eval_left_basis(k, b_mi));
                vec_sub_inplace(wb, L.bracket_right_basis(p_ki, m));
                vec_add_inplace(wb, L.bracket_right_basis(p_km, i));

                Vec<K> wc = P.eval_right_basis(b_km, i);
                vec_add_inplace(wc, P.eval_right_basis(b_mi, k));
                vec_sub_inplace(wc, P.eval_left_basis(m, b_ik));
                vec_sub_inplace(wc, L.bracket_right_basis(p_mk, i));
                vec_add_inplace(wc, L.bracket_right_basis(p_mi, k));

                // quadratic slice coefficients
                Vec<K> uaa = P.eval_right_basis(p_ik, m);
                vec_sub_inplace(uaa, P.eval_right_basis(p_im, k));
                Vec<K> ubb = P.eval_right_basis(p_km, i);
                vec_sub_inplace(ubb, P.eval_right_basis(p_ki, m));
                Vec<K> ucc = P.eval_right_basis(p_mi, k);
                vec_sub_inplace(ucc, P.eval_right_basis(p_mk, i));

                Vec<K> uab = P.eval_right_basis(p_ik, m);
                vec_sub_inplace(uab, P.eval_right_basis(p_ki, m));
                vec_sub_inplace(uab, P.eval_left_basis(i, p_km));
                vec_add_inplace(uab, P.eval_left_basis(k, p_im));

                Vec<K> uac = P.eval_left_basis(i, p_mk);
                vec_sub_inplace(uac, P.eval_left_basis(m, p_ik));
                vec_sub_inplace(uac, P.eval_right_basis(p_im, k));
                vec_add_inplace(uac, P.eval_right_basis(p_mi, k));

                Vec<K> ubc = P.eval_left_basis(m, p_ki);
                vec_sub_inplace(ubc, P.eval_right_basis(p_mk, i));
                vec_add_inplace(ubc, P.eval_right_basis(p_km, i));
                vec_sub_inplace(ubc, P.eval_left_basis(k, p_mi));

                if (vec_is_zero(ch0) && vec_is_zero(wa) && vec_is_zero(wb) && vec_is_zero(wc) &&
                    vec_is_zero(uaa) && vec_is_zero(ubb) && vec_is_zero(ucc) &&
                    vec_is_zero(uab) && vec_is_zero(uac) && vec_is_zero(ubc))
                    continue; // defect vanishes for every degree assignment

                for (long long a = -w; a <= w; ++a)
                    for (long long b = -w; b <= w; ++b)
                        for (long long c = -w; c <= w; ++c) {
                            const long long d0 = a + b + c;
                            Vec<K> ch2 = vec_zero<K>(f, n);
                            vec_axpy(ch2, scalar_of(a * a - a), uaa);
                            vec_axpy(ch2, scalar_of(b * b - b), ubb);
                            vec_axpy(ch2, scalar_of(c * c - c), ucc);
                            vec_axpy(ch2, scalar_of(a * b), uab);
                            vec_axpy(ch2, scalar_of(a * c), uac);
                            vec_axpy(ch2, scalar_of(b * c), ubc);
                            Vec<K> ch1 = vec_zero<K>(f, n);
                            vec_axpy(ch1, scalar_of(a), wa);
                            vec_axpy(ch1, scalar_of(b), wb);
                            vec_axpy(ch1, scalar_of(c), wc);

                            const std::vector<long long> base = {
                                static_cast<long long>(i), a, static_cast<long long>(k), b,
                                static_cast<long long>(m), c};
                            auto emit = [&](long long deg, const Vec<K>& defect) {
                                if (vec_is_zero(defect)) return;
                                auto idx = base;
                                idx.push_back(deg);
                                rep.add({"affine_jacobi", "eq:1.11", std::move(idx), defect});
                            };
                            emit(d0 - 2, ch2);
                            emit(d0 - 1, ch1);
                            emit(d0, ch0);
                        }
            }
    return rep;
}

template <Scalar K>
CheckReport<K> check_affine_jacobi(const GDBialgebra<K>& g, std::size_t window,
                                   std::size_t witness_cap = 10) {
    return check_affine_jacobi(g.lie(), g.product(), window, witness_cap);
}

} // namespace gdnov

#endif
