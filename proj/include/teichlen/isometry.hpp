#pragma once

#include <cmath>
#include <string_view>

#include "teichlen/errors.hpp"
#include "teichlen/mat2.hpp"

namespace teichlen {

/// Tolerance on |trace| - 2 used by the trichotomy. Double precision products
/// over words of length <= 16 with entries of size <= 1e2 keep the trace error
/// far below this.
inline constexpr double kClassifyTol = 1e-9;

/// Determinant drift allowed after construction and composition.
inline constexpr double kDetTol = 1e-12;

enum class IsometryClass {
    Hyperbolic,
    Parabolic,
    Elliptic,
    IdentityLike,
};

constexpr std::string_view to_string(IsometryClass c) {
    switch (c) {
        case IsometryClass::Hyperbolic: return "hyperbolic";
        case IsometryClass::Parabolic: return "parabolic";
        case IsometryClass::Elliptic: return "elliptic";
        case IsometryClass::IdentityLike: return "identity-like";
    }
    return "?";
}

template <class R>
IsometryClass classify(const Mat2<R>& t, double tol = kClassifyTol) {
    using std::abs;
    const R at = abs(t.trace());
    if (at > R(2) + R(tol)) return IsometryClass::Hyperbolic;
    if (at < R(2) - R(tol)) return IsometryClass::Elliptic;
    // |trace| == 2 within tolerance: split identity-like from a genuine shear.
    const R off = std::max(abs(t.b), abs(t.c));
    const R diag = std::min(abs(t.a - R(1)) + abs(t.d - R(1)),
                            abs(t.a + R(1)) + abs(t.d + R(1)));
    if (off < R(tol) && diag < R(tol)) return IsometryClass::IdentityLike;
    return IsometryClass::Parabolic;
}

/// Displacement along the axis, 2 arccosh(|tr|/2). Throws NotHyperbolic on
/// |trace| <= 2 + tol.
template <class R>
R translation_length(const Mat2<R>& t, double tol = kClassifyTol) {
    using std::abs;
    const R at = abs(t.trace());
    if (!(at > R(2) + R(tol)))
        throw NotHyperbolic("translation_length: |trace| <= 2 + tolerance");
    return R(2) * std::acosh(at / R(2));
}

/// Absolute value of the dominant eigenvalue of T^2; satisfies
/// exp(translation_length(T)) == eigen_lambda(T).
template <class R>
R eigen_lambda(const Mat2<R>& t, double tol = kClassifyTol) {
    using std::abs;
    if (!(abs(t.trace()) > R(2) + R(tol)))
        throw NotHyperbolic("eigen_lambda: |trace| <= 2 + tolerance");
    const R t2 = abs((t * t).trace());
    return (t2 + std::sqrt(t2 * t2 - R(4))) / R(2);
}

/// trace(T*T), numerically equal to trace(T)^2 - 2.
template <class R>
R trace_of_square(const Mat2<R>& t) {
    return (t * t).trace();
}

/// Throws InvalidInput when the determinant drifted beyond tolerance.
template <class R>
void require_unimodular(const Mat2<R>& t, double tol = kDetTol) {
    using std::abs;
    if (abs(t.det() - R(1)) > R(tol))
        throw InvalidInput("matrix determinant differs from 1 beyond tolerance");
}

} // namespace teichlen
