#pragma once

#include <stdexcept>
#include <string>

namespace zbrace {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checked 64-bit arithmetic left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

// |det| != 1 where an element of GL2(Z) is required.
class NotUnimodular : public Error {
public:
    using Error::Error;
};

// Centralizer requested for E, -E or an infinite-order matrix.
class UnsupportedOrder : public Error {
public:
    using Error::Error;
};

// A pair (phi, psi) that does not define a brace was used where one is required.
class InvalidSpec : public Error {
public:
    using Error::Error;
};

// A generator formula produced a non-integer entry (non-square radicand, inexact division).
class IntegralityError : public Error {
public:
    using Error::Error;
};

class GcdError : public Error {
public:
    using Error::Error;
};

// Missing, surplus or out-of-domain row parameters.
class BadParams : public Error {
public:
    using Error::Error;
};

}  // namespace zbrace
