#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "teichlen/errors.hpp"

namespace teichlen {

/// Monic polynomial with exact integer coefficients, stored ascending:
/// coeffs[i] is the coefficient of x^i, coeffs.back() == 1, degree >= 1.
class IntPolynomial {
public:
    explicit IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() < 2) throw InvalidInput("polynomial degree must be >= 1");
        if (coeffs_.back() != 1) throw InvalidInput("polynomial must be monic");
    }

    /// Accepts real coefficients only when they are integers to within tol.
    static IntPolynomial from_rounded(const std::vector<double>& coeffs, double tol = 1e-9) {
        std::vector<std::int64_t> out;
        out.reserve(coeffs.size());
        for (const double c : coeffs) {
            const double r = std::round(c);
            if (std::abs(c - r) > tol)
                throw InvalidInput("coefficient is not an integer: " + std::to_string(c));
            out.push_back(static_cast<std::int64_t>(r));
        }
        return IntPolynomial(std::move(out));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator<(const IntPolynomial& o) const {
        if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
        // descending-coefficient lexicographic, so x^2-3x+1 < x^2+3x+1
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
        return false;
    }

    template <class R>
    R evaluate(R x) const {
        R v = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * x + R(coeffs_[i]);
        return v;
    }

    std::int64_t evaluate_int(std::int64_t x) const {
        std::int64_t v = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
        return v;
    }

    /// "x^3 - 3x - 1" style rendering, highest power first.
    std::string to_string() const {
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const std::int64_t c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            if (!s.empty()) s += c > 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            const std::int64_t a = c > 0 ? c : -c;
            if (a != 1 || i == 0) s += std::to_string(a);
            if (i > 0) s += a != 1 ? "*x" : "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    std::vector<std::int64_t> coeffs_;
};

namespace detail {

inline std::vector<std::int64_t> positive_divisors(std::int64_t n) {
    n = n < 0 ? -n : n;
    std::vector<std::int64_t> ds;
    for (std::int64_t i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            ds.push_back(i);
            if (i != n / i) ds.push_back(n / i);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

/// Exact division of monic `num` by monic `den` (ascending coefficients).
/// Returns true and fills `quot` when the remainder vanishes.
inline bool exact_monic_division(const std::vector<std::int64_t>& num,
                                 const std::vector<std::int64_t>& den,
                                 std::vector<std::int64_t>* quot = nullptr) {
    const std::size_t dn = num.size() - 1, dd = den.size() - 1;
    if (dd > dn) return false;
    std::vector<std::int64_t> rem(num);
    std::vector<std::int64_t> q(dn - dd + 1, 0);
    for (std::size_t i = dn - dd + 1; i-- > 0;) {
        const std::int64_t c = rem[i + dd];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= c * den[j];
    }
    for (std::size_t j = 0; j < dd; ++j)
        if (rem[j] != 0) return false;
    if (quot) *quot = std::move(q);
    return true;
}

} // namespace detail

inline constexpr std::uint64_t kFactorBoxCap = 10'000'000;

/// Irreducibility over Q by trial factorization over Z: integer roots first,
/// then monic divisors of each degree k <= deg/2 inside the coefficient box
/// |d_i| <= C(k, i) * R^i with constant term dividing P(0). `root_modulus_bound`
/// should dominate the modulus of every root of P; by default the Cauchy bound
/// is used. Intended for degree <= 8.
inline bool is_irreducible(const IntPolynomial& p, double root_modulus_bound = -1) {
    const int n = p.degree();
    if (n == 1) return true;
    if (p[0] == 0) return false; // x divides
    for (const std::int64_t d : detail::positive_divisors(p[0])) {
        if (p.evaluate_int(d) == 0 || p.evaluate_int(-d) == 0) return false;
    }
    if (n <= 3) return true; // only linear factors possible below degree 4
    double R = root_modulus_bound;
    if (R <= 0) {
        std::int64_t m = 0;
        for (int i = 0; i < n; ++i) {
            const std::int64_t c = p[static_cast<std::size_t>(i)];
            m = std::max(m, c < 0 ? -c : c);
        }
        R = 1.0 + static_cast<double>(m);
    }
    R += 1e-9;

    const auto const_divs = detail::positive_divisors(p[0]);
    for (int k = 2; k <= n / 2; ++k) {
        // bounds for the middle coefficients d_1..d_{k-1}
        std::vector<std::int64_t> box(static_cast<std::size_t>(k - 1));
        std::uint64_t total = 1;
        for (int i = 1; i < k; ++i) {
            double binom = 1;
            for (int j = 0; j < i; ++j) binom = binom * (k - j) / (j + 1);
            const double lim = binom * std::pow(R, i);
            if (lim > 1e18) throw CapacityExceeded("factor coefficient box overflow");
            box[static_cast<std::size_t>(i - 1)] = static_cast<std::int64_t>(std::floor(lim));
            total *= static_cast<std::uint64_t>(2 * box[static_cast<std::size_t>(i - 1)] + 1);
            if (total > kFactorBoxCap)
                throw CapacityExceeded("irreducibility trial-factor box too large");
        }
        std::vector<std::int64_t> mid(static_cast<std::size_t>(k - 1), 0);
        for (std::size_t i = 0; i < mid.size(); ++i) mid[i] = -box[i];
        // odometer over the box, each constant-term divisor sign
        while (true) {
            for (const std::int64_t d0 : const_divs) {
                const double d0lim = std::pow(R, k) + 1;
                if (static_cast<double>(d0) > d0lim) continue;
                for (const int sign : {1, -1}) {
                    std::vector<std::int64_t> den;
                    den.reserve(static_cast<std::size_t>(k + 1));
                    den.push_back(sign * d0);
                    for (std::size_t i = mid.size(); i-- > 0;) den.push_back(mid[i]);
                    den.push_back(1);
                    if (detail::exact_monic_division(p.coeffs(), den)) return false;
                }
            }
            std::size_t pos = 0;
            while (pos < mid.size()) {
                if (mid[pos] < box[pos]) {
                    ++mid[pos];
                    break;
                }
                mid[pos] = -box[pos];
                ++pos;
            }
            if (pos == mid.size()) break;
        }
    }
    return true;
}

} // namespace teichlen
