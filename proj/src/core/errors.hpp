#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqt {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (number grammar, polynomial or dissection files).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg), position_(position) {}

    /// Byte offset (or line number, for line-oriented formats) of the error.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Violated mathematical precondition: division by zero, mismatched
/// radicands, negative discriminant, inadmissible tiling ratio, ...
class DomainError : public Error {
public:
    using Error::Error;
};

/// A condition the library guarantees cannot occur for valid inputs
/// (e.g. a singular Kirchhoff system for a network built from a valid
/// dissection). Seeing one of these is a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace sqt
