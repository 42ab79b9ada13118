#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "teichlen/errors.hpp"
#include "teichlen/reciprocal.hpp"
#include "teichlen/report.hpp"

namespace teichlen {

/// 2 arccosh(1 / (2 sin(pi / (12g - 6)))): every point of a genus-g surface
/// has a geodesic loop shorter than this.
inline double minimal_loop_bound(std::int64_t g) {
    if (g < 2) throw InvalidInput("genus must be at least 2");
    return 2.0 * std::acosh(1.0 / (2.0 * std::sin(M_PI / (12.0 * static_cast<double>(g) - 6.0))));
}

/// Collar half-width arcsinh(1/sinh(l/2)); strictly decreasing in l.
inline double collar_width(double l) {
    if (!(l > 0)) throw InvalidInput("collar width needs a positive length");
    return std::asinh(1.0 / std::sinh(l / 2.0));
}

/// log(sinh(l/2)), the distance bound from a loop to the collar of its
/// geodesic; only positive (and only stated) for l > 2 arcsinh(1).
inline double collar_distance_bound(double l_loop) {
    if (!(l_loop > 2.0 * std::asinh(1.0)))
        throw NonPositiveBound("loop too short: log(sinh(l/2)) would be non-positive");
    const double x = l_loop / 2.0;
    // stable for large arguments: log(sinh x) = x + log1p(-e^{-2x}) - log 2
    return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
}

/// The three curve-and-chain system bounds for genus g and injectivity radius
/// floor eps: curves, chains, arcs.
struct CurveChainArcBounds {
    double curve;
    double chain;
    double arc;
};

inline CurveChainArcBounds curve_chain_arc_bounds(std::int64_t g, double eps) {
    if (g < 2) throw InvalidInput("genus must be at least 2");
    if (!(eps > 0)) throw InvalidInput("injectivity radius floor must be positive");
    const double lg4 = std::log(4.0 * static_cast<double>(g));
    const double w = std::asinh(1.0 / std::sinh(eps / 2.0));
    return {2.0 * lg4, 8.0 * lg4 + 4.0 * w, 2.0 * lg4 + 2.0 * w};
}

/// Short-system length bound together with the curve-count cap 15g - 15.
struct SystemBound {
    double length_bound;
    std::int64_t max_curves;
};

inline SystemBound system_length_bound(std::int64_t g, double s) {
    if (g < 2) throw InvalidInput("genus must be at least 2");
    if (!(s > 0)) throw InvalidInput("injectivity radius must be positive");
    return {20.0 * std::log(4.0 * static_cast<double>(g)) +
                8.0 * std::asinh(1.0 / std::sinh(s / 2.0)),
            15 * g - 15};
}

/// (4/3) log g: genera admitting surfaces whose every geodesic is at least
/// this long exist, which pins how far the system bound can be improved.
inline double log_genus_systole_floor(double g) {
    if (!(g >= 2)) throw InvalidInput("genus must be at least 2");
    return 4.0 / 3.0 * std::log(g);
}

/// L(x) = log arccosh((x-2)/2) for x > 4: the log of the geodesic length as a
/// function of the squared trace.
inline double log_length_from_trace_square(double x) {
    if (!(x > 4)) throw DomainError("log length needs squared trace > 4");
    return std::log(std::acosh((x - 2.0) / 2.0));
}

/// L'(x) = 1 / (sqrt(x(x-4)) arccosh((x-2)/2)), which exceeds 1/x^2 on the
/// whole domain.
inline double log_length_from_trace_square_derivative(double x) {
    if (!(x > 4)) throw DomainError("log length derivative needs squared trace > 4");
    return 1.0 / (std::sqrt(x * (x - 4.0)) * std::acosh((x - 2.0) / 2.0));
}

/// Default additive constant c(d) of the length bound at stretch 1: the
/// short-system constant with the systolic floor s(d) = log(2)/(4d).
inline double default_length_constant(int d, double L = 1.0) {
    const double s = systole_lower_bound(d, L);
    return 20.0 * std::log(4.0) + 8.0 * std::asinh(1.0 / std::sinh(s / 2.0));
}

struct DistanceBoundInputs {
    std::int64_t g;
    int d;
    double c_d;   // additive constant of the length bound (see default_length_constant)
    double c_gap; // trace separation constant (see gap_constant)

    double C_d() const { return std::exp(c_d); }
};

struct DistanceBound {
    double log_value;     // log of A g^{-240}
    double value;         // exp of the above; 0 when it underflows
    double log_theta_max; // log of the mean-value point bound 4 C_d^2 g^{120}
};

/// Lower bound A g^{-240} with A = c_gap / (16 C_d^4), evaluated in log space.
inline DistanceBound distance_lower_bound(const DistanceBoundInputs& in) {
    if (in.g < 2) throw InvalidInput("genus must be at least 2");
    if (in.d < 1) throw InvalidInput("degree must be at least 1");
    if (!(in.c_gap > 0)) throw InvalidInput("gap constant must be positive");
    const double logg = std::log(static_cast<double>(in.g));
    const double log_A = std::log(in.c_gap) - std::log(16.0) - 4.0 * in.c_d;
    const double log_value = log_A - 240.0 * logg;
    return {log_value,
            log_value < -700.0 ? 0.0 : std::exp(log_value),
            std::log(4.0) + 2.0 * in.c_d + 120.0 * logg};
}

struct TopoTypesBound {
    double log_value; // log of (3g-3)(4g-4)^2 (1/e^6) (12^6/e^5)^{g-1} (g-1)^{6g-6}
    double base;      // minimal B with the product <= B^g g^{6g} over 2 <= g <= 10^4
};

namespace detail {

inline double topo_types_log(double g) {
    const double gm = g - 1.0;
    return std::log(3.0 * gm) + 2.0 * std::log(4.0 * gm) - 6.0 +
           gm * (6.0 * std::log(12.0) - 5.0) + 6.0 * gm * std::log(gm);
}

} // namespace detail

/// Count bound for topological types of the marked parametrizations, in log
/// space, together with the smallest base B making B^g g^{6g} dominate over
/// the sweep 2 <= g <= 10^4. The base is a computed value, not a quoted one.
inline TopoTypesBound topo_types_bound(std::int64_t g) {
    if (g < 2) throw InvalidInput("genus must be at least 2");
    double base_log = -std::numeric_limits<double>::infinity();
    for (std::int64_t gg = 2; gg <= 10000; ++gg) {
        const double need =
            (detail::topo_types_log(static_cast<double>(gg)) -
             6.0 * static_cast<double>(gg) * std::log(static_cast<double>(gg))) /
            static_cast<double>(gg);
        base_log = std::max(base_log, need);
    }
    return {detail::topo_types_log(static_cast<double>(g)), std::exp(base_log)};
}

struct CountingInputs {
    std::int64_t g;
    int d;
    double L;
    double sigma; // length-scale constant in (sigma g)^{20L}; see default_sigma
    double B;     // topological-type base; defaults to topo_types_bound().base
    double b = 1; // lower-bound constant in (bg)^{2g}; no explicit value is known
};

struct CountingBounds {
    double log_lower; // log (bg)^{2g}
    double log_upper; // log B^g g^{6g} [2d (4d)^{d^2} (sigma g)^{20Ld^2}]^{15(g-1)}
    double log_B1;    // log B + 15 [log 2d + d^2 log 4d + 20Ld^2 log sigma]
    double B2;        // 6 + 300 L d^2
    double C;         // log(B1)/log(2) + B2
};

/// Default sigma: exp(c(d, L) / 20), so that 20 log(sigma g) dominates the
/// short-system bound at the systolic floor for (d, L).
inline double default_sigma(int d, double L) {
    return std::exp(default_length_constant(d, L) / 20.0);
}

/// Upper and lower counting bounds for bounded-degree bounded-stretch surfaces
/// of genus g, in natural-log space.
inline CountingBounds sa_counting_bounds(const CountingInputs& in) {
    if (in.g < 2) throw InvalidInput("genus must be at least 2");
    if (in.d < 2) throw InvalidInput("degree must be at least 2");
    if (!(in.L >= 1)) throw InvalidInput("stretch must be at least 1");
    if (!(in.sigma > 0 && in.B > 0 && in.b > 0)) throw InvalidInput("constants must be positive");
    const double g = static_cast<double>(in.g);
    const double d2 = static_cast<double>(in.d) * in.d;
    const double per_curve =
        std::log(2.0 * in.d) + d2 * std::log(4.0 * in.d) + 20.0 * in.L * d2 * std::log(in.sigma * g);
    const double log_upper = g * std::log(in.B) + 6.0 * g * std::log(g) + 15.0 * (g - 1.0) * per_curve;
    const double log_lower = 2.0 * g * std::log(in.b * g);
    const double log_B1 =
        std::log(in.B) + 15.0 * (std::log(2.0 * in.d) + d2 * std::log(4.0 * in.d) +
                                 20.0 * in.L * d2 * std::log(in.sigma));
    const double B2 = 6.0 + 300.0 * in.L * d2;
    return {log_lower, log_upper, log_B1, B2, log_B1 / std::log(2.0) + B2};
}

/// K-quasiconformal length distortion: after in [before/K, K before].
inline BoundReport qc_length_distortion_check(double K, double l_before, double l_after) {
    if (!(K >= 1)) throw InvalidInput("dilatation must be at least 1");
    if (!(l_before > 0 && l_after > 0)) throw InvalidInput("lengths must be positive");
    BoundReport r;
    r.name = "quasiconformal length distortion window";
    r.inputs = {{"K", K}, {"l_before", l_before}, {"l_after", l_after}};
    r.lhs = l_after;
    r.rhs = K * l_before;
    const double tol = 1e-12 * std::max(1.0, l_before);
    r.pass = l_after >= l_before / K - tol && l_after <= K * l_before + tol;
    r.citation = "geodesic length distortion under quasiconformal maps";
    return r;
}

} // namespace teichlen
