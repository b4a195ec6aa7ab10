#pragma once

#include <stdexcept>
#include <string>

namespace tworat {

// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (even modulus, non-squarefree label, parse failure...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A fixed-width intermediate would not fit.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Factorization, continued fraction or enumeration exceeded its configured effort bound.
class EffortBoundExceeded : public Error {
public:
    using Error::Error;
};

// Inputs do not satisfy the hypotheses an operation requires
// (non-primitive prime, base field not 2-birational, ...).
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

// A computed result contradicts a proven statement. Never expected to fire;
// raised instead of silently returning a wrong certificate.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

}  // namespace tworat
