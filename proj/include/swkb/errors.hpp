#pragma once

#include <stdexcept>
#include <string>

namespace swkb {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// x lies outside the superpotential's domain (or on an open endpoint).
struct DomainError : Error {
    using Error::Error;
};

/// A constant required by the class formula is absent.
struct UnknownParameter : Error {
    using Error::Error;
};

/// Parameters violate a class validity constraint (e.g. a=0 for Class II).
struct ValidityError : Error {
    using Error::Error;
};

/// W never changes sign in the domain; signals broken supersymmetry.
struct NoZeroCrossing : Error {
    using Error::Error;
};

/// No sign change found before reaching a domain endpoint.
struct BracketError : Error {
    using Error::Error;
};

/// An iterative scheme exhausted its refinement budget.
struct NotConverged : Error {
    using Error::Error;
};

/// Enlarging the oracle box shifts eigenvalues beyond tolerance.
struct BoxTooSmall : Error {
    using Error::Error;
};

}  // namespace swkb
