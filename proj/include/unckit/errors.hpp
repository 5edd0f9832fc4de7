#ifndef UNCKIT_ERRORS_HPP_
#define UNCKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace unckit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

// Gamma evaluated at a non-positive integer.
struct PoleError : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct ToleranceNotMet : Error {
    using Error::Error;
};

struct MixedWidthError : Error {
    using Error::Error;
};

struct ScheduleTooShort : Error {
    using Error::Error;
};

struct DegenerateData : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

}  // namespace unckit

#endif
