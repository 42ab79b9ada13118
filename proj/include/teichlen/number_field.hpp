#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "teichlen/errors.hpp"
#include "teichlen/polynomial.hpp"
#include "teichlen/report.hpp"
#include "teichlen/roots.hpp"

namespace teichlen {

/// Exact rational with 64-bit numerator/denominator, always normalized.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw InvalidInput("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    long double value() const {
        return static_cast<long double>(num) / static_cast<long double>(den);
    }
    bool operator==(const Rational&) const = default;
};

/// A totally real number field: irreducible defining polynomial whose roots
/// are all real, one root distinguished as the identity embedding.
class RealField {
public:
    explicit RealField(IntPolynomial defining_poly,
                       std::optional<double> identity_root_hint = std::nullopt)
        : poly_(std::move(defining_poly)) {
        if (poly_.degree() > 8)
            throw InvalidInput("fields are restricted to degree <= 8");
        if (!is_irreducible(poly_))
            throw InvalidInput("defining polynomial is reducible");
        const auto reals = real_roots(poly_);
        if (static_cast<int>(reals.size()) != poly_.degree())
            throw InvalidInput("defining polynomial is not totally real");
        for (std::size_t i = 1; i < reals.size(); ++i)
            if (reals[i] - reals[i - 1] < 1e-10L)
                throw InvalidInput("defining polynomial has clustered roots");
        roots_.assign(reals.begin(), reals.end());
        identity_ = static_cast<int>(roots_.size()) - 1; // default: largest root
        if (identity_root_hint) {
            long double best = 1e30L;
            for (std::size_t i = 0; i < roots_.size(); ++i) {
                const long double d = std::abs(roots_[i] - static_cast<long double>(*identity_root_hint));
                if (d < best) {
                    best = d;
                    identity_ = static_cast<int>(i);
                }
            }
        }
    }

    const IntPolynomial& defining_poly() const { return poly_; }
    int degree() const { return poly_.degree(); }
    /// Real roots of the defining polynomial, ascending.
    const std::vector<long double>& roots() const { return roots_; }
    int identity_index() const { return identity_; }
    long double identity_root() const { return roots_[static_cast<std::size_t>(identity_)]; }

private:
    IntPolynomial poly_;
    std::vector<long double> roots_;
    int identity_;
};

using FieldPtr = std::shared_ptr<const RealField>;

/// Element in the power basis 1, t, ..., t^{d-1} of its field.
struct FieldElement {
    std::vector<Rational> coords;
    FieldPtr field;

    FieldElement(std::vector<Rational> c, FieldPtr f)
        : coords(std::move(c)), field(std::move(f)) {
        if (!field) throw InvalidInput("field element without a field");
        if (static_cast<int>(coords.size()) != field->degree())
            throw InvalidInput("coordinate count must equal the field degree");
    }

    long double evaluate_at(long double root) const {
        long double v = 0;
        for (std::size_t i = coords.size(); i-- > 0;) v = v * root + coords[i].value();
        return v;
    }
};

/// Values of the element under every real embedding, identity embedding first,
/// the rest in ascending order of the conjugate root.
inline std::vector<double> embed_all(const FieldElement& x) {
    std::vector<double> out;
    out.reserve(x.field->roots().size());
    out.push_back(static_cast<double>(x.evaluate_at(x.field->identity_root())));
    for (std::size_t i = 0; i < x.field->roots().size(); ++i) {
        if (static_cast<int>(i) == x.field->identity_index()) continue;
        out.push_back(static_cast<double>(x.evaluate_at(x.field->roots()[i])));
    }
    return out;
}

/// Product over all embeddings; a nonzero integer (up to roundoff) whenever the
/// element is an algebraic integer.
inline double field_norm(const FieldElement& x) {
    long double prod = 1;
    for (const long double r : x.field->roots()) prod *= x.evaluate_at(r);
    return static_cast<double>(prod);
}

/// Characteristic polynomial coefficients must be integers (within tol) for an
/// algebraic integer; coordinates that arrive from floating harvests make the
/// tolerant check the honest one.
inline bool is_integral(const FieldElement& x, double tol = 1e-6) {
    const int d = x.field->degree();
    std::vector<long double> embeds;
    for (const long double r : x.field->roots()) embeds.push_back(x.evaluate_at(r));
    // expand prod (T - e_i) and check every coefficient
    std::vector<long double> c{1.0L};
    for (const long double e : embeds) {
        std::vector<long double> nc(c.size() + 1, 0.0L);
        for (std::size_t i = 0; i < c.size(); ++i) {
            nc[i + 1] += c[i];
            nc[i] -= e * c[i];
        }
        c = std::move(nc);
    }
    for (int i = 0; i < d; ++i) {
        const long double v = c[static_cast<std::size_t>(i)];
        if (std::abs(v - std::round(v)) > static_cast<long double>(tol)) return false;
    }
    return true;
}

/// Explicit admissible separation constant 4^{-(d-1)} for squared traces in a
/// degree-d totally real field; exact in binary floating point.
inline double gap_constant(int d) {
    if (d < 1) throw InvalidInput("need d >= 1");
    return std::ldexp(1.0, -2 * (d - 1));
}

/// Checks |t^2 - t'^2| > 4^{-(d-1)} for integral traces with distinct absolute
/// identity embeddings, under the window |phi_i(t^2 - 2)| <= 2 at every
/// non-identity embedding. The window is a checkable precondition on the pair;
/// nothing is certified about the group it came from.
inline BoundReport verify_gap(const FieldElement& t, const FieldElement& t_prime) {
    if (t.field.get() != t_prime.field.get() &&
        !(t.field->defining_poly() == t_prime.field->defining_poly()))
        throw InvalidInput("trace pair must live in one field");
    const auto et = embed_all(t);
    const auto ep = embed_all(t_prime);
    if (std::abs(std::abs(et[0]) - std::abs(ep[0])) <= 1e-9)
        throw SameAbsTrace("traces with equal absolute value have no gap");
    if (!is_integral(t) || !is_integral(t_prime))
        throw NonIntegral("trace is not an algebraic integer");
    for (std::size_t i = 1; i < et.size(); ++i) {
        const double wt = et[i] * et[i] - 2.0;
        const double wp = ep[i] * ep[i] - 2.0;
        if (std::abs(wt) > 2.0 + 1e-9)
            throw ArithmeticityViolated(
                "embedding " + std::to_string(i) + " of t^2-2 is " + std::to_string(wt),
                static_cast<int>(i));
        if (std::abs(wp) > 2.0 + 1e-9)
            throw ArithmeticityViolated(
                "embedding " + std::to_string(i) + " of t'^2-2 is " + std::to_string(wp),
                static_cast<int>(i));
    }
    BoundReport r;
    r.name = "squared trace separation";
    r.inputs = {{"t", et[0]},
                {"t_prime", ep[0]},
                {"d", static_cast<double>(t.field->degree())}};
    r.lhs = std::abs(et[0] * et[0] - ep[0] * ep[0]);
    r.rhs = gap_constant(t.field->degree());
    r.pass = r.lhs > r.rhs - 1e-12;
    r.citation = "integral norm separation (Luo-Sarnak minimal spacing)";
    return r;
}

/// Named field presets used by the CLI and the experiments. "rational" is the
/// degree-1 field Q, defined by the polynomial x.
inline FieldPtr field_preset(const std::string& name) {
    if (name == "rational")
        return std::make_shared<RealField>(IntPolynomial({0, 1}));
    if (name == "sqrt2")
        return std::make_shared<RealField>(IntPolynomial({-2, 0, 1}), 1.5);
    if (name == "sqrt5")
        return std::make_shared<RealField>(IntPolynomial({-5, 0, 1}), 2.2);
    if (name == "cubic")
        return std::make_shared<RealField>(IntPolynomial({-1, -3, 0, 1}), 1.9);
    throw InvalidConfig("unknown field preset: " + name);
}

struct LatticeRounding {
    FieldElement element;
    double residual;
};

/// Rounds a real value to the nearest ring-of-integers point a + b*t of a
/// quadratic field, scanning the generator coefficient over the window allowed
/// by `max_conjugate_abs` (the lattice is dense in R, so an unbounded scan
/// would be meaningless). Rejects when the best residual exceeds `max_residual`.
/// Fields with discriminant 1 mod 4 are scanned over half-integer pairs.
inline std::optional<LatticeRounding> round_to_lattice(double value, const FieldPtr& field,
                                                       double max_conjugate_abs = 2.0,
                                                       double max_residual = 1e-5) {
    if (field->degree() != 2)
        throw InvalidInput("lattice rounding implemented for quadratic fields only");
    const long double theta = field->identity_root();
    const long double theta_conj =
        field->roots()[field->identity_index() == 0 ? 1 : 0];
    // D from x^2 - D (presets have zero linear term); half-integers appear for
    // D = 1 mod 4 where the ring of integers is Z[(1+sqrt(D))/2]
    const std::int64_t constant = field->defining_poly()[0];
    const bool halves = field->defining_poly()[1] == 0 && ((-constant) % 4 + 4) % 4 == 1;
    const int denom = halves ? 2 : 1;

    // value = a + b*theta with conjugate a + b*theta_conj constrained:
    // b*(theta - theta_conj) = value - conj, so b is confined to a short window
    const long double span = theta - theta_conj;
    const long double w = static_cast<long double>(max_conjugate_abs) + 1.0L;
    const long double b_lo = (static_cast<long double>(value) - w) / span;
    const long double b_hi = (static_cast<long double>(value) + w) / span;
    const long double bmin = std::min(b_lo, b_hi); // span is signed
    const long double bmax = std::max(b_lo, b_hi);

    std::optional<LatticeRounding> best;
    for (std::int64_t bn = static_cast<std::int64_t>(std::floor(bmin * denom)) - 1;
         bn <= static_cast<std::int64_t>(std::ceil(bmax * denom)) + 1; ++bn) {
        const Rational b(bn, denom);
        const long double rest = static_cast<long double>(value) - b.value() * theta;
        std::int64_t an = static_cast<std::int64_t>(std::round(rest * denom));
        if (halves && ((an % 2 + 2) % 2) != ((bn % 2 + 2) % 2)) {
            // a and b must share parity over denominator 2
            const std::int64_t up = an + 1, down = an - 1;
            an = std::abs(rest * denom - up) < std::abs(rest * denom - down) ? up : down;
        }
        const Rational a(an, denom);
        const double resid =
            static_cast<double>(std::abs(static_cast<long double>(value) -
                                         (a.value() + b.value() * theta)));
        if (!best || resid < best->residual)
            best = LatticeRounding{FieldElement({a, b}, field), resid};
    }
    if (!best || best->residual > max_residual) return std::nullopt;
    return best;
}

} // namespace teichlen
