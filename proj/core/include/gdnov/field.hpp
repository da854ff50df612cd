#ifndef GDNOV_FIELD_HPP
#define GDNOV_FIELD_HPP

#include <cstdint>
#include <string>

#include "gdnov/errors.hpp"

namespace gdnov {

/// Runtime descriptor of the base field: the rationals or a prime field
/// GF(p).  Every container (matrix, algebra, product, ...) carries one so
/// that mixed-field operations can be rejected.
class Field {
public:
    enum class Kind { rationals, prime };

    static Field rationals() { return Field(Kind::rationals, 0); }

    /// GF(p).  p must be prime and < 2^31; checked here, nowhere else.
    static Field prime(std::uint32_t p) {
        if (p < 2 || p >= (1u << 31) || !is_prime(p))
            throw SchemaError("InvalidPrime",
                              "GF modulus must be a prime < 2^31, got " + std::to_string(p));
        return Field(Kind::prime, p);
    }

    Kind kind() const noexcept { return kind_; }
    std::uint32_t modulus() const noexcept { return p_; }
    std::uint32_t characteristic() const noexcept { return kind_ == Kind::prime ? p_ : 0; }

    bool operator==(const Field&) const noexcept = default;

    std::string str() const {
        return kind_ == Kind::rationals ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
    }

private:
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

    static bool is_prime(std::uint32_t n) {
        if (n < 4) return n >= 2;
        if (n % 2 == 0 || n % 3 == 0) return false;
        for (std::uint64_t d = 5; d * d <= n; d += 6)
            if (n % d == 0 || n % (d + 2) == 0) return false;
        return true;
    }

    Kind kind_;
    std::uint32_t p_;
};

inline void require_same_field(const Field& a, const Field& b, const char* where) {
    if (!(a == b))
        throw InvariantError("FieldMismatch",
                             std::string(where) + ": operands live in different fields (" +
                                 a.str() + " vs " + b.str() + ")");
}

} // namespace gdnov

#endif
