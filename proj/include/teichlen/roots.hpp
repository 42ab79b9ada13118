#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "teichlen/errors.hpp"
#include "teichlen/polynomial.hpp"

namespace teichlen {

namespace detail {

using CL = std::complex<long double>;

inline CL horner(const std::vector<std::int64_t>& c, CL x) {
    CL v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + CL(static_cast<long double>(c[i]));
    return v;
}

inline CL horner_derivative(const std::vector<std::int64_t>& c, CL x) {
    CL v = 0;
    for (std::size_t i = c.size(); i-- > 1;)
        v = v * x + CL(static_cast<long double>(i) * static_cast<long double>(c[i]));
    return v;
}

} // namespace detail

/// All complex roots by Durand-Kerner iteration in extended precision with a
/// Newton polish per root. The polynomials handled here are small (degree <= 8)
/// with exact integer coefficients; irreducible inputs have simple roots and
/// the iteration is reliable for them.
inline std::vector<std::complex<long double>> all_roots(const IntPolynomial& p) {
    using detail::CL;
    const auto& c = p.coeffs();
    const int n = p.degree();
    // Cauchy radius
    long double radius = 0;
    for (int i = 0; i < n; ++i)
        radius = std::max(radius, std::abs(static_cast<long double>(c[static_cast<std::size_t>(i)])));
    radius = 1.0L + radius;

    std::vector<CL> z(static_cast<std::size_t>(n));
    const CL seed(0.4L, 0.9L); // standard non-real seed avoids symmetry locking
    CL acc(1.0L, 0.0L);
    for (int i = 0; i < n; ++i) {
        acc *= seed;
        z[static_cast<std::size_t>(i)] = acc * (radius / std::abs(acc));
    }
    for (int iter = 0; iter < 500; ++iter) {
        long double worst = 0;
        for (int i = 0; i < n; ++i) {
            CL num = detail::horner(c, z[static_cast<std::size_t>(i)]);
            CL den(1.0L, 0.0L);
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            if (std::abs(den) == 0.0L) {
                z[static_cast<std::size_t>(i)] += CL(1e-6L, 1e-6L);
                worst = 1;
                continue;
            }
            const CL delta = num / den;
            z[static_cast<std::size_t>(i)] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-20L * radius) break;
    }
    // Newton polish sharpens each root to full extended precision.
    for (auto& r : z) {
        for (int it = 0; it < 60; ++it) {
            const CL f = detail::horner(c, r);
            const CL df = detail::horner_derivative(c, r);
            if (std::abs(df) == 0.0L) break;
            const CL step = f / df;
            r -= step;
            if (std::abs(step) < 1e-22L * std::max(1.0L, std::abs(r))) break;
        }
    }
    return z;
}

/// Maximum root modulus, refined well below the 1e-10 relative tolerance the
/// house comparisons need.
inline double house(const IntPolynomial& p) {
    long double m = 0;
    for (const auto& r : all_roots(p)) m = std::max(m, std::abs(r));
    return static_cast<double>(m);
}

/// Real roots, ascending. A root is accepted as real when its imaginary part
/// is negligible against its modulus; it is then re-polished on the real line
/// (Newton with bisection fallback on a sign-change bracket).
inline std::vector<long double> real_roots(const IntPolynomial& p) {
    std::vector<long double> out;
    for (const auto& r : all_roots(p)) {
        if (std::abs(r.imag()) > 1e-10L * std::max(1.0L, std::abs(r))) continue;
        long double x = r.real();
        for (int it = 0; it < 60; ++it) {
            const long double f = p.evaluate<long double>(x);
            const long double df =
                detail::horner_derivative(p.coeffs(), detail::CL(x, 0.0L)).real();
            if (df == 0.0L) break;
            const long double step = f / df;
            x -= step;
            if (std::abs(step) < 1e-22L * std::max(1.0L, std::abs(x))) break;
        }
        // reject spurious real candidates (conjugate pairs straddling the axis)
        const long double scale = std::max(1.0L, std::abs(x));
        long double lo = x - 1e-9L * scale, hi = x + 1e-9L * scale;
        const long double flo = p.evaluate<long double>(lo);
        const long double fhi = p.evaluate<long double>(hi);
        const long double fx = std::abs(p.evaluate<long double>(x));
        if (!(flo * fhi <= 0 || fx < 1e-15L * std::pow(scale, p.degree()))) continue;
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    // collapse duplicates produced by near-real conjugate pairs
    out.erase(std::unique(out.begin(), out.end(),
                          [](long double a, long double b) {
                              return std::abs(a - b) < 1e-12L * std::max(1.0L, std::abs(a));
                          }),
              out.end());
    return out;
}

} // namespace teichlen
