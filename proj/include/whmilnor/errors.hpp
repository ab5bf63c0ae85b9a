#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace whm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Incompatible operands: different variable lists, wrong dimensions, bad indices.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition does not hold (e.g. input not weighted homogeneous).
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// A step budget was exhausted or an exponent overflowed a machine word.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

} // namespace whm
