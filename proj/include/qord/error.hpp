// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qord {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands live in different rings.
class RingMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed textual element or identifier.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A mathematical check failed in a way that aborts the operation; `what()`
/// carries the witness in textual element syntax.
class VerificationError : public Error {
public:
    using Error::Error;
};

} // namespace qord
