#pragma once

#include <stdexcept>
#include <string>

namespace gomcol {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// The caller violated an API precondition (mismatched lengths, bad indices).
class UsageError : public Error {
public:
    using Error::Error;
};

/// The selected basis columns are not invertible.
class SingularBasisError : public Error {
public:
    using Error::Error;
};

/// A pivot was requested on a zero element.
class PivotError : public Error {
public:
    using Error::Error;
};

/// Cut derivation was requested for a dual coordinate that is already integer.
class NotFractionalError : public Error {
public:
    using Error::Error;
};

/// An explicitly supplied integer shift violates the validity condition.
class InvalidShiftError : public Error {
public:
    using Error::Error;
};

/// A documented contract between modules was broken by the caller.
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Malformed instance document.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Instance document with inconsistent dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Constraint matrix does not have full row rank.
class RankError : public Error {
public:
    using Error::Error;
};

/// Enumeration request exceeds the configured volume cap.
class TooLargeError : public Error {
public:
    using Error::Error;
};

/// The continuous relaxation is unbounded where a bounded one is required.
class BoundednessError : public Error {
public:
    using Error::Error;
};

}  // namespace gomcol
