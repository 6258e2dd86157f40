#pragma once

#include <stdexcept>
#include <string>

namespace exactla {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Wrong matrix shape: non-square input, non-conforming product, bad block sizes.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A 1-based row/column index outside the matrix.
class IndexError : public ShapeError {
public:
    using ShapeError::ShapeError;
};

/// Operands live in different rings.
class RingMismatch : public Error {
public:
    using Error::Error;
};

/// The ring lacks a capability the operation needs (e.g. division by integers).
class Unsupported : public Error {
public:
    using Error::Error;
};

/// An argument violates a documented precondition (guards, composite primes, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed JSON, ring descriptor or element literal.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace exactla
