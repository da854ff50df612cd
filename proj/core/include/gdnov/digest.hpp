#ifndef GDNOV_DIGEST_HPP
#define GDNOV_DIGEST_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace gdnov {

/// FNV-1a, 64-bit.  Regression digest for enumeration results; not
/// cryptographic.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string fnv1a64_hex(std::string_view s) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(s);
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4) out += digits[(h >> shift) & 0xF];
    return out;
}

} // namespace gdnov

#endif
