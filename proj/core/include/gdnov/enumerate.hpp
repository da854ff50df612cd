#ifndef GDNOV_ENUMERATE_HPP
#define GDNOV_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "gdnov/matrix.hpp"

namespace gdnov {

/// Number of rows×cols matrices over the (finite) field, i.e. p^(rows*cols).
/// Throws CapExceeded when the count would exceed `cap`, NotFiniteField over Q.
inline std::uint64_t finite_matrix_count(const Field& f, std::size_t cells, std::uint64_t cap) {
    if (f.kind() != Field::Kind::prime)
        throw InvariantError("NotFiniteField", "enumeration requires a prime field");
    std::uint64_t total = 1;
    for (std::size_t c = 0; c < cells; ++c) {
        if (total > UINT64_MAX / f.modulus())
            throw SearchError("CapExceeded", "matrix count overflows the enumeration cap");
        total *= f.modulus();
        if (total > cap)
            throw SearchError("CapExceeded", "p^(cells) exceeds cap " + std::to_string(cap));
    }
    return total;
}

/// Calls fn with every rows×cols matrix over GF(p), in lexicographic order of
/// the row-major entry tuple (all-zero matrix first, last entry fastest).
template <Scalar K, class Fn>
void for_each_matrix(const Field& f, std::size_t rows, std::size_t cols, std::uint64_t cap,
                     Fn&& fn) {
    const std::size_t cells = rows * cols;
    const std::uint64_t total = finite_matrix_count(f, cells, cap);
    const std::uint32_t p = f.modulus();

    std::vector<std::uint32_t> digits(cells, 0);
    Matrix<K> m(f, rows, cols);
    for (std::uint64_t count = 0; count < total; ++count) {
        fn(static_cast<const Matrix<K>&>(m));
        // increment: last cell is the fastest digit
        std::size_t pos = cells;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < p) {
                m.at(pos / cols, pos % cols) = FieldOps<K>::from_int(f, digits[pos]);
                break;
            }
            digits[pos] = 0;
            m.at(pos / cols, pos % cols) = FieldOps<K>::zero(f);
        }
    }
}

} // namespace gdnov

#endif
