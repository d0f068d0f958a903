#pragma once

#include <stdexcept>
#include <string>

namespace fusionring {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed type string, rank outside the classification, bad weight literal.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A configured enumeration cap (Weyl group order, |T_k|) would be exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Floating-point evaluation drifted outside its stated tolerance.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

/// Inconsistent hard-coded data or a broken internal invariant.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace fusionring
