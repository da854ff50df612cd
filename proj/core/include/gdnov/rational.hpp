#ifndef GDNOV_RATIONAL_HPP
#define GDNOV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "gdnov/errors.hpp"

namespace gdnov {

/// Arbitrary-precision rational, always held in canonical form: coprime
/// numerator/denominator, positive denominator.  Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(long long num, long long den) : v_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw SchemaError("ZeroDenominator", "rational with denominator 0");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "n" or "n/d" in base 10.
    static Rational parse(const std::string& s) {
        if (s.empty()) throw SchemaError("BadScalar", "empty rational literal");
        try {
            mpq_class q(s, 10);
            if (q.get_den() == 0) throw SchemaError("ZeroDenominator", "rational with denominator 0: " + s);
            q.canonicalize();
            return Rational(std::move(q));
        } catch (const std::invalid_argument&) {
            throw SchemaError("BadScalar", "not a rational literal: '" + s + "'");
        }
    }

    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw InvariantError("DivisionByZero", "rational division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inv() const {
        if (is_zero()) throw InvariantError("DivisionByZero", "inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    /// Order is used only for deterministic tie-breaking, never for math.
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

} // namespace gdnov

#endif
