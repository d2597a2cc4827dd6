#pragma once

#include <stdexcept>
#include <string>

namespace nnfif {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition or invariant on user-supplied parameters does not hold.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Evaluation point outside the function's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A theorem hypothesis checked at run time failed (matching conditions, gates).
class HypothesisFailure : public Error {
public:
    using Error::Error;
};

} // namespace nnfif
