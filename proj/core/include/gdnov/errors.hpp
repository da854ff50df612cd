#ifndef GDNOV_ERRORS_HPP
#define GDNOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gdnov {

/// Base error carrying a stable machine-readable code naming the violated
/// invariant (e.g. "NotAbelian", "DimensionMismatch", "CapExceeded").
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Malformed or inconsistent input (files, indices, field descriptors).
/// CLI exit code 2.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A construction precondition does not hold on otherwise well-formed input
/// (AbelianityViolated, NotProper, NotComplement, NotAbelian,
/// BadCharacteristic, NotOrthonormal, NotInvariant, InvalidLie, ...).
/// CLI exit code 2.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// A bounded search or enumeration gave up (NotFound, CapExceeded,
/// NotFiniteField). CLI exit code 3.
class SearchError : public Error {
public:
    using Error::Error;
};

} // namespace gdnov

#endif
