#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posenergy {

/// Base class for every error raised by the library. Catch this in drivers
/// that must keep going after a single network fails.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates a type invariant (bad network id, negative count, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Conversion between units of different dimensions (power vs energy).
class UnitError : public Error {
public:
    using Error::Error;
};

/// Evaluation outside the domain of a formula, e.g. per-tx energy at zero throughput.
class DomainError : public Error {
public:
    using Error::Error;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class DegenerateVarianceError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t row, const std::string& what)
        : Error(source + ":" + std::to_string(row) + ": " + what), row_(row) {}

    /// 1-based line number in the source file (header is line 1).
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class DuplicateError : public Error {
public:
    using Error::Error;
};

class ConflictError : public Error {
public:
    using Error::Error;
};

class MissingDataError : public Error {
public:
    using Error::Error;
};

class NetworkError : public Error {
public:
    using Error::Error;
};

/// The fetched document no longer carries a mapped field.
class SchemaDriftError : public Error {
public:
    using Error::Error;
};

} // namespace posenergy
