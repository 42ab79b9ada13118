#pragma once

#include <stdexcept>
#include <string>

namespace teichlen {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A construction-time invariant was violated (bad lengths, bad matrices, ...).
struct InvalidInput : Error {
    using Error::Error;
};

/// An operation requiring a hyperbolic isometry was given |trace| <= 2 + tol.
struct NotHyperbolic : Error {
    using Error::Error;
};

/// Word enumeration exhausted its budget without finding a hyperbolic element.
struct NoHyperbolicWord : Error {
    using Error::Error;
};

/// A search lattice exceeded the configured candidate budget.
struct CapacityExceeded : Error {
    using Error::Error;
};

/// The algebraic integer has house 1, i.e. is a root of unity.
struct RootOfUnity : Error {
    using Error::Error;
};

/// Trace separation is undefined when |t| == |t'|.
struct SameAbsTrace : Error {
    using Error::Error;
};

/// A non-identity embedding of a squared trace left the window [-2, 2].
struct ArithmeticityViolated : Error {
    ArithmeticityViolated(const std::string& msg, int embedding)
        : Error(msg), embedding_index(embedding) {}
    int embedding_index;
};

/// A field element failed the algebraic-integer test.
struct NonIntegral : Error {
    using Error::Error;
};

/// No twist on any monotone branch matches both target lengths.
struct NoConsistentTwist : Error {
    using Error::Error;
};

/// The collar distance bound is only defined for loops longer than 2 arcsinh(1).
struct NonPositiveBound : Error {
    using Error::Error;
};

/// Function argument outside the mathematical domain.
struct DomainError : Error {
    using Error::Error;
};

/// Bad CLI/config input.
struct InvalidConfig : Error {
    using Error::Error;
};

} // namespace teichlen
