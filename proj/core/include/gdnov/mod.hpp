#ifndef GDNOV_MOD_HPP
#define GDNOV_MOD_HPP

#include <cstdint>
#include <string>

#include "gdnov/errors.hpp"

namespace gdnov {

/// Element of GF(p), stored as the canonical residue in [0, p).  Each value
/// carries its modulus; mixing moduli is a programming error and throws.
class Mod {
public:
    Mod() : v_(0), p_(0) {}
    Mod(std::uint32_t canonical, std::uint32_t p) : v_(canonical), p_(p) {}

    static Mod from_int(long long x, std::uint32_t p) {
        long long r = x % static_cast<long long>(p);
        if (r < 0) r += p;
        return Mod(static_cast<std::uint32_t>(r), p);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    std::string str() const { return std::to_string(v_); }
    bool is_zero() const { return v_ == 0; }

    Mod operator-() const { return Mod(v_ == 0 ? 0 : p_ - v_, p_); }
    Mod operator+(const Mod& o) const {
        check(o);
        std::uint32_t s = v_ + o.v_;
        return Mod(s >= p_ ? s - p_ : s, p_);
    }
    Mod operator-(const Mod& o) const {
        check(o);
        return Mod(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    Mod operator*(const Mod& o) const {
        check(o);
        return Mod(static_cast<std::uint32_t>(
                       (static_cast<std::uint64_t>(v_) * o.v_) % p_),
                   p_);
    }
    Mod operator/(const Mod& o) const { return *this * o.inv(); }
    Mod& operator+=(const Mod& o) { return *this = *this + o; }
    Mod& operator-=(const Mod& o) { return *this = *this - o; }
    Mod& operator*=(const Mod& o) { return *this = *this * o; }

    Mod inv() const {
        if (v_ == 0) throw InvariantError("DivisionByZero", "inverse of zero in GF(p)");
        // extended Euclid on (v, p); p prime
        std::int64_t t = 0, new_t = 1, r = p_, new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (t < 0) t += p_;
        return Mod(static_cast<std::uint32_t>(t), p_);
    }

    bool operator==(const Mod& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Mod& o) const { return !(*this == o); }
    bool operator<(const Mod& o) const { return v_ < o.v_; }

private:
    void check(const Mod& o) const {
        if (p_ != o.p_)
            throw InvariantError("FieldMismatch", "GF(p) arithmetic across different moduli");
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

} // namespace gdnov

#endif
