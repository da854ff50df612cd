#ifndef GDNOV_SCALAR_HPP
#define GDNOV_SCALAR_HPP

#include <concepts>
#include <string>
#include <vector>

#include "gdnov/field.hpp"
#include "gdnov/mod.hpp"
#include "gdnov/rational.hpp"

namespace gdnov {

/// Exact field element: the whole library is parameterized over this.
template <class K>
concept Scalar = requires(const K a, const K b) {
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.inv() } -> std::same_as<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.str() } -> std::same_as<std::string>;
    { a == b } -> std::same_as<bool>;
};

/// Mints scalars of type K inside a given runtime Field.
template <Scalar K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static bool matches(const Field& f) { return f.kind() == Field::Kind::rationals; }
    static Rational zero(const Field&) { return Rational(0); }
    static Rational one(const Field&) { return Rational(1); }
    static Rational from_int(const Field&, long long x) { return Rational(x); }
    static Rational parse(const Field&, const std::string& s) { return Rational::parse(s); }
};

template <>
struct FieldOps<Mod> {
    static bool matches(const Field& f) { return f.kind() == Field::Kind::prime; }
    static Mod zero(const Field& f) { return Mod(0, f.modulus()); }
    static Mod one(const Field& f) { return Mod::from_int(1, f.modulus()); }
    static Mod from_int(const Field& f, long long x) { return Mod::from_int(x, f.modulus()); }
    static Mod parse(const Field& f, const std::string& s) {
        if (s.empty()) throw SchemaError("BadScalar", "empty GF(p) literal");
        std::size_t pos = 0;
        long long x = 0;
        try {
            x = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw SchemaError("BadScalar", "not a GF(p) literal: '" + s + "'");
        }
        if (pos != s.size()) throw SchemaError("BadScalar", "not a GF(p) literal: '" + s + "'");
        return Mod::from_int(x, f.modulus());
    }
};

/// Runs fn.operator()<K>() with K = Rational or Mod according to the field.
template <class Fn>
decltype(auto) field_dispatch(const Field& f, Fn&& fn) {
    if (f.kind() == Field::Kind::rationals) return fn.template operator()<Rational>();
    return fn.template operator()<Mod>();
}

// ---- small exact-vector helpers used throughout -------------------------

template <Scalar K>
using Vec = std::vector<K>;

template <Scalar K>
Vec<K> vec_zero(const Field& f, std::size_t n) {
    return Vec<K>(n, FieldOps<K>::zero(f));
}

template <Scalar K>
bool vec_is_zero(const Vec<K>& v) {
    for (const K& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <Scalar K>
Vec<K> vec_neg(Vec<K> v) {
    for (K& x : v) x = -x;
    return v;
}

template <Scalar K>
void vec_add_inplace(Vec<K>& y, const Vec<K>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += x[i];
}

template <Scalar K>
void vec_sub_inplace(Vec<K>& y, const Vec<K>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= x[i];
}

/// y += a*x, skipping when a == 0.
template <Scalar K>
void vec_axpy(Vec<K>& y, const K& a, const Vec<K>& x) {
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
}

template <Scalar K>
Vec<K> vec_scale(const K& a, Vec<K> v) {
    for (K& x : v) x = a * x;
    return v;
}

template <Scalar K>
std::string vec_str(const Vec<K>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

} // namespace gdnov

#endif
