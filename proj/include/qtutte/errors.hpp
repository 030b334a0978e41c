#pragma once

#include <stdexcept>
#include <string>

namespace qtutte {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rows of different length, ambient mismatch, wrong interval length.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Invalid field description or element outside the field.
class FieldError : public Error {
public:
    using Error::Error;
};

/// Malformed input (JSON, representatives, polynomial text).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Element-count cap or search budget exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A rank function or weighting violates the q-matroid axioms.
/// The message carries the witnessing elements.
class AxiomError : public Error {
public:
    using Error::Error;
};

/// Partition construction or validation failed.
class PartitionError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its precondition
/// (incomparable endpoints, non-prime-free input to a prime-free check, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace qtutte
