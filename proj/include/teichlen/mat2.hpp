#pragma once

#include <cmath>
#include <ostream>

namespace teichlen {

/// 2x2 real matrix with unit determinant, acting on the hyperbolic plane.
/// The scalar is a template parameter so the same kernels can run in double
/// or extended precision; `Isometry` below is the double instantiation used
/// throughout the public API.
template <class R>
struct Mat2 {
    R a{1}, b{0}, c{0}, d{1};

    constexpr Mat2() = default;
    constexpr Mat2(R a_, R b_, R c_, R d_) : a(a_), b(b_), c(c_), d(d_) {}

    static constexpr Mat2 identity() { return Mat2{}; }

    /// Diagonal translation diag(e^{l/2}, e^{-l/2}): displacement l along the
    /// imaginary axis.
    static Mat2 axis_translation(R l) {
        const R e = std::exp(l / R(2));
        return Mat2{e, R(0), R(0), R(1) / e};
    }

    constexpr R trace() const { return a + d; }

    /// Kahan-style determinant: fma keeps the difference of products accurate
    /// to a few ulp of the result even when a*d and b*c nearly cancel.
    R det() const {
        const R w = b * c;
        const R err = std::fma(b, c, -w);
        return std::fma(a, d, -w) - err;
    }

    constexpr Mat2 operator*(const Mat2& o) const {
        return Mat2{a * o.a + b * o.c, a * o.b + b * o.d,
                    c * o.a + d * o.c, c * o.b + d * o.d};
    }

    /// Inverse under the det == 1 convention.
    constexpr Mat2 inverse() const { return Mat2{d, -b, -c, a}; }

    /// Conjugation by the orientation-reversing reflection z -> -conj(z).
    constexpr Mat2 mirrored() const { return Mat2{a, -b, -c, d}; }

    template <class S>
    constexpr Mat2<S> cast() const {
        return Mat2<S>{S(a), S(b), S(c), S(d)};
    }
};

using Isometry = Mat2<double>;

template <class R>
constexpr Mat2<R> compose(const Mat2<R>& lhs, const Mat2<R>& rhs) {
    return lhs * rhs;
}

template <class R>
inline R max_abs_entry_diff(const Mat2<R>& x, const Mat2<R>& y) {
    using std::abs;
    R m = abs(x.a - y.a);
    m = std::max(m, abs(x.b - y.b));
    m = std::max(m, abs(x.c - y.c));
    m = std::max(m, abs(x.d - y.d));
    return m;
}

template <class R>
inline std::ostream& operator<<(std::ostream& os, const Mat2<R>& m) {
    return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

} // namespace teichlen
