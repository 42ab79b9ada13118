#pragma once

#include <cmath>

#include "teichlen/errors.hpp"

namespace teichlen {

template <class R>
struct HexagonSides {
    R alpha, beta, gamma; // opposite a, b, c respectively
};

/// Right-angled geodesic hexagon with alternating sides a, b, c: the opposite
/// sides satisfy
///
///   cosh(alpha) = (cosh a + cosh b cosh c) / (sinh b sinh c)
///
/// and cyclically. Applying the solver to (alpha, beta, gamma) returns
/// (a, b, c): the two alternating triples play symmetric roles.
template <class R>
HexagonSides<R> hexagon_solve(R a, R b, R c) {
    if (!(a > 0 && b > 0 && c > 0))
        throw InvalidInput("hexagon sides must be positive");
    const R ca = std::cosh(a), cb = std::cosh(b), cc = std::cosh(c);
    const R sa = std::sinh(a), sb = std::sinh(b), sc = std::sinh(c);
    return {std::acosh((ca + cb * cc) / (sb * sc)),
            std::acosh((cb + ca * cc) / (sa * sc)),
            std::acosh((cc + ca * cb) / (sa * sb))};
}

/// Common perpendicular between the boundaries of lengths l1 and l2 in the
/// pair of pants (l1, l2, l3). This is the hexagon relation on half-lengths.
template <class R>
R pants_perpendicular(R l1, R l2, R l3) {
    if (!(l1 > 0 && l2 > 0 && l3 > 0))
        throw InvalidInput("pants boundary lengths must be positive");
    return std::acosh((std::cosh(l3 / 2) + std::cosh(l1 / 2) * std::cosh(l2 / 2)) /
                      (std::sinh(l1 / 2) * std::sinh(l2 / 2)));
}

namespace detail {

/// cosh and sinh of half the perpendicular between boundaries 1 and 2 of the
/// pants (l1, l2, l3), computed without the acosh/cosh round trip:
///   (cosh p - 1) sinh(l1/2) sinh(l2/2) = cosh(l3/2) + cosh((l1-l2)/2)
///   (cosh p + 1) sinh(l1/2) sinh(l2/2) = cosh(l3/2) + cosh((l1+l2)/2)
/// keeps full relative precision down to near-degenerate boundaries.
template <class R>
struct HalfPerp {
    R ch, sh;
};

template <class R>
HalfPerp<R> pants_half_perpendicular(R l1, R l2, R l3) {
    const R s12 = std::sinh(l1 / 2) * std::sinh(l2 / 2);
    const R c3 = std::cosh(l3 / 2);
    const R minus = c3 + std::cosh((l1 - l2) / 2);
    const R plus = c3 + std::cosh((l1 + l2) / 2);
    return {std::sqrt(plus / (2 * s12)), std::sqrt(minus / (2 * s12))};
}

} // namespace detail

} // namespace teichlen
