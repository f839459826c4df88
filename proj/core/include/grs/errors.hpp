#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grs {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed meridian expression; position() is the 0-based offset into the source.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Evaluation left the mathematical domain of a primitive (sqrt of a negative
/// number, ln of a non-positive one, ...) or produced a non-finite value.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Argument outside the meridian's declared u-interval.
class OutOfDomainError : public Error {
public:
    using Error::Error;
};

/// The surface inequalities fail at the requested point.
class InvalidPointError : public Error {
public:
    using Error::Error;
};

/// A guarded denominator factor vanished; the message names the factor.
class SingularityError : public Error {
public:
    using Error::Error;
};

} // namespace grs
