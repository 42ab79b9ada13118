#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "teichlen/errors.hpp"
#include "teichlen/polynomial.hpp"
#include "teichlen/report.hpp"
#include "teichlen/roots.hpp"

namespace teichlen {

/// Minimal polynomials of reciprocal algebraic integers are coefficient
/// palindromes of even degree; the two rational units +-1 are the only
/// degree-1 cases.
inline bool is_reciprocal(const IntPolynomial& p) {
    const int n = p.degree();
    if (n == 1) return p[0] == 1 || p[0] == -1; // x - 1 and x + 1
    if (n % 2 != 0) return false;
    for (int i = 0; i <= n; ++i)
        if (p[static_cast<std::size_t>(i)] != p[static_cast<std::size_t>(n - i)]) return false;
    return true;
}

/// Coefficient bound binom(2d, i) * X^i for the i-th coefficient of a degree-2d
/// reciprocal minimal polynomial with house <= X.
inline double coefficient_bound(int degree_2d, int i, double X) {
    if (degree_2d < 2 || degree_2d % 2 != 0) throw InvalidInput("degree must be even and >= 2");
    if (i < 1 || i > degree_2d / 2) throw InvalidInput("coefficient index out of range");
    if (!(X >= 1)) throw InvalidInput("house bound must be >= 1");
    double binom = 1;
    for (int j = 0; j < i; ++j) binom = binom * (degree_2d - j) / (j + 1);
    return binom * std::pow(X, i);
}

/// A real reciprocal algebraic integer: minimal polynomial, one selected real
/// root, and the house (max root modulus).
struct ReciprocalUnit {
    IntPolynomial min_poly;
    double real_root;
    double house;
};

/// Natural log of the cardinality bound 2m (4mX)^{m^2}.
inline double count_bound_log(int m, double X) {
    if (m < 1 || !(X >= 1)) throw InvalidInput("need m >= 1 and X >= 1");
    return std::log(2.0 * m) + static_cast<double>(m) * m * std::log(4.0 * m * X);
}

/// Cardinality bound 2m (4mX)^{m^2}; +inf when not representable.
inline double count_bound(int m, double X) {
    const double lg = count_bound_log(m, X);
    if (lg > 700.0) return std::numeric_limits<double>::infinity();
    return 2.0 * m * std::pow(4.0 * m * X, static_cast<double>(m) * m);
}

struct EnumerationConfig {
    std::uint64_t capacity = 100'000'000; // candidate coefficient vectors
};

namespace detail {

/// Trace form of a palindrome: P(x) / x^d = Q(x + 1/x) with Q monic of degree
/// d and integer coefficients, via x^k + x^{-k} = T_k(y), T_k = y T_{k-1} -
/// T_{k-2}. Input a[0..d-1] holds a_1..a_d; output is ascending.
inline std::vector<std::int64_t> palindrome_trace_form(const std::vector<std::int64_t>& a) {
    const int d = static_cast<int>(a.size());
    std::vector<std::int64_t> q(static_cast<std::size_t>(d + 1), 0);
    // T_0 = 2, T_1 = y as coefficient vectors
    std::vector<std::int64_t> tkm1{2}, tk{0, 1};
    q[0] += a[static_cast<std::size_t>(d - 1)]; // a_d contributes once, not via T_0
    if (d >= 1)
        for (std::size_t j = 0; j < tk.size(); ++j)
            q[j] += (d == 1 ? 1 : a[static_cast<std::size_t>(d - 2)]) * tk[j];
    for (int k = 2; k <= d; ++k) {
        std::vector<std::int64_t> next(static_cast<std::size_t>(k + 1), 0);
        for (std::size_t j = 0; j < tk.size(); ++j) next[j + 1] += tk[j];
        for (std::size_t j = 0; j < tkm1.size(); ++j) next[j] -= tkm1[j];
        tkm1 = std::move(tk);
        tk = std::move(next);
        const std::int64_t coeff = k == d ? 1 : a[static_cast<std::size_t>(d - k - 1)];
        for (std::size_t j = 0; j < tk.size(); ++j) q[j] += coeff * tk[j];
    }
    return q;
}

struct HouseScreen {
    double house;
    bool has_real_root;
};

/// Fast double-precision house estimate for a palindrome via its trace form:
/// each root y of Q lifts to the pair x^2 - y x + 1 = 0 whose moduli multiply
/// to 1; real x exist exactly for real y with |y| > 2. Closed form for
/// deg Q <= 2, which covers every degree the enumerations use.
inline HouseScreen screen_palindrome(const std::vector<std::int64_t>& a) {
    const auto q = palindrome_trace_form(a);
    std::vector<std::complex<double>> ys;
    if (q.size() == 2) {
        ys.emplace_back(-static_cast<double>(q[0]), 0.0);
    } else if (q.size() == 3) {
        const double b = static_cast<double>(q[1]), c = static_cast<double>(q[0]);
        const double disc = b * b - 4.0 * c;
        if (disc >= 0) {
            const double s = std::sqrt(disc);
            ys.emplace_back((-b + s) / 2.0, 0.0);
            ys.emplace_back((-b - s) / 2.0, 0.0);
        } else {
            const double s = std::sqrt(-disc);
            ys.emplace_back(-b / 2.0, s / 2.0);
            ys.emplace_back(-b / 2.0, -s / 2.0);
        }
    } else {
        return {-1.0, true}; // degree beyond the closed form: no screening
    }
    HouseScreen out{1.0, false};
    for (const auto& y : ys) {
        const std::complex<double> root = std::sqrt(y * y - 4.0);
        const double m = std::max(std::abs((y + root) / 2.0), std::abs((y - root) / 2.0));
        out.house = std::max(out.house, m);
        // margin: borderline cases go to the exact path, which decides
        if (y.imag() == 0.0 && std::abs(y.real()) > 2.0 - 1e-9) out.has_real_root = true;
    }
    return out;
}

} // namespace detail

/// Houses equal to the bound X are kept (the bound is non-strict); this slack
/// absorbs the floating-point side of that tie.
inline constexpr double kHouseTieTol = 1e-9;

/// Exhaustive list of real reciprocal algebraic integers of degree <= 2m and
/// house <= X: for each even degree the palindromic coefficient vectors inside
/// the coefficient bound are screened for house, irreducibility, and a real
/// root. Every real root of an admitted polynomial is emitted as its own unit,
/// so the list counts numbers rather than polynomials. Output is sorted by
/// (degree, coefficients, root) and is deterministic.
inline std::vector<ReciprocalUnit> enumerate_reciprocal_units(
    int m, double X, const EnumerationConfig& config = {}) {
    if (m < 1) throw InvalidInput("need m >= 1");
    if (!(X >= 1)) throw InvalidInput("need X >= 1");

    std::vector<ReciprocalUnit> out;
    out.push_back({IntPolynomial({-1, 1}), 1.0, 1.0});  // x - 1
    out.push_back({IntPolynomial({1, 1}), -1.0, 1.0});  // x + 1

    for (int d = 1; d <= m; ++d) {
        std::vector<std::int64_t> lim(static_cast<std::size_t>(d));
        std::uint64_t total = 1;
        for (int i = 1; i <= d; ++i) {
            const double b = coefficient_bound(2 * d, i, X);
            if (b > 9e17) throw CapacityExceeded("coefficient bound exceeds integer range");
            lim[static_cast<std::size_t>(i - 1)] = static_cast<std::int64_t>(std::floor(b + 1e-9));
            const std::uint64_t width =
                static_cast<std::uint64_t>(2 * lim[static_cast<std::size_t>(i - 1)] + 1);
            if (total > config.capacity / width + 1)
                throw CapacityExceeded("enumeration lattice exceeds configured capacity");
            total *= width;
        }
        if (total > config.capacity)
            throw CapacityExceeded("enumeration lattice exceeds configured capacity");

        // a[i] is the coefficient a_{i+1}, bounded by lim[i]
        std::vector<std::int64_t> a(static_cast<std::size_t>(d));
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = -lim[i];
        while (true) {
            // palindromic coefficients 1, a1, ..., ad, ..., a1, 1 (ascending)
            std::vector<std::int64_t> cs(static_cast<std::size_t>(2 * d + 1));
            cs[0] = 1;
            cs[static_cast<std::size_t>(2 * d)] = 1;
            for (int i = 1; i <= d; ++i) {
                cs[static_cast<std::size_t>(2 * d - i)] = a[static_cast<std::size_t>(i - 1)];
                cs[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i - 1)];
            }
            // +-1 roots mean a cyclotomic factor; skip before any root work
            std::int64_t at_one = 0, at_neg = 0;
            for (std::size_t i = cs.size(); i-- > 0;) {
                at_one += cs[i];
                at_neg = -at_neg + cs[i];
            }
            const auto screen = detail::screen_palindrome(a);
            const bool plausible =
                screen.house < 0 ||
                (screen.has_real_root && screen.house <= X * (1.0 + 1e-6) + 1e-6);
            if (at_one != 0 && at_neg != 0 && plausible) {
                const IntPolynomial p(std::move(cs));
                const double h = house(p);
                if (h <= X + kHouseTieTol * std::max(1.0, X)) {
                    const auto reals = real_roots(p);
                    if (!reals.empty() && is_irreducible(p, h)) {
                        for (const long double r : reals)
                            out.push_back({p, static_cast<double>(r), h});
                    }
                }
            }
            std::size_t pos = 0;
            while (pos < a.size()) {
                if (a[pos] < lim[pos]) {
                    ++a[pos];
                    break;
                }
                a[pos] = -lim[pos];
                ++pos;
            }
            if (pos == a.size()) break;
        }
    }
    std::sort(out.begin(), out.end(), [](const ReciprocalUnit& x, const ReciprocalUnit& y) {
        if (!(x.min_poly == y.min_poly)) return x.min_poly < y.min_poly;
        return x.real_root < y.real_root;
    });
    return out;
}

/// House of a unit that is not a root of unity exceeds 2^{1/(4d)}.
inline BoundReport check_dimitrov(const ReciprocalUnit& u, int d) {
    if (d < 1) throw InvalidInput("need d >= 1");
    if (std::abs(u.house - 1.0) <= 1e-10)
        throw RootOfUnity("house is 1: root of unity has no lower house gap");
    BoundReport r;
    r.name = "house lower bound of a non-cyclotomic unit";
    r.inputs = {{"d", static_cast<double>(d)},
                {"degree", static_cast<double>(u.min_poly.degree())}};
    r.lhs = u.house;
    r.rhs = std::pow(2.0, 1.0 / (4.0 * d));
    r.pass = r.lhs > r.rhs;
    r.citation = "Dimitrov 2019 (Schinzel-Zassenhaus bound)";
    return r;
}

/// log(2) / (4 d L): lower bound for closed-geodesic lengths from degree and
/// stretch.
inline double systole_lower_bound(int d, double L) {
    if (d < 1 || !(L >= 1)) throw InvalidInput("need d >= 1 and L >= 1");
    return std::log(2.0) / (4.0 * d * L);
}

struct ExpLengthResult {
    BoundReport report;
    std::optional<ReciprocalUnit> match;
};

/// Searches the units of degree <= 2d and house <= e^{length * L} for one whose
/// real root has logarithm `length` within `tolerance`. A miss is reported as
/// inconclusive (a true match may sit beyond the tolerance or capacity), never
/// as a failure.
inline ExpLengthResult exp_length_is_unit(double length, int d, double L, double tolerance,
                                          const EnumerationConfig& config = {}) {
    if (!(length > 0)) throw InvalidInput("need a positive length");
    if (d < 1 || !(L >= 1)) throw InvalidInput("need d >= 1 and L >= 1");
    const double X = std::exp(length * L);
    const auto units = enumerate_reciprocal_units(d, X, config);
    double best = std::numeric_limits<double>::infinity();
    std::optional<ReciprocalUnit> found;
    for (const auto& u : units) {
        if (!(u.real_root > 0)) continue;
        const double resid = std::abs(std::log(u.real_root) - length);
        if (resid < best) {
            best = resid;
            if (resid < tolerance) found = u;
        }
    }
    ExpLengthResult res;
    res.report.name = "length exponential is a reciprocal unit";
    res.report.inputs = {{"length", length},
                         {"d", static_cast<double>(d)},
                         {"L", L},
                         {"house_bound", X}};
    res.report.lhs = best;
    res.report.rhs = tolerance;
    res.report.pass = found.has_value();
    res.report.citation = "reciprocal trace polynomial x^2 - tr(T^2) x + 1";
    if (!found) res.report.note = "inconclusive: no unit matched within tolerance/capacity";
    res.match = found;
    return res;
}

} // namespace teichlen
