#pragma once

#include <stdexcept>
#include <string>

namespace prelie {

/// Base class for every error the library raises on invalid input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive search was asked to scan more candidates than its cap allows.
class CapExceededError : public Error {
public:
    using Error::Error;
};

/// A finite-only operation was requested over an infinite field.
class InfiniteFieldError : public Error {
public:
    using Error::Error;
};

} // namespace prelie
