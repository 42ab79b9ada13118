#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "teichlen/errors.hpp"
#include "teichlen/isometry.hpp"
#include "teichlen/words.hpp"

namespace teichlen {

/// Relators must evaluate to +-identity within this entrywise tolerance.
inline constexpr double kRelatorTol = 1e-8;

struct Generator {
    std::string label;
    Isometry matrix;
};

/// Matrix generators of a Fuchsian group, with optional relator words that are
/// verified (never used for reduction) at construction.
class GroupPresentation {
public:
    GroupPresentation(std::vector<Generator> generators, std::vector<Word> relators = {})
        : generators_(std::move(generators)), relators_(std::move(relators)) {
        if (generators_.empty()) throw InvalidInput("presentation needs at least one generator");
        for (const auto& g : generators_) require_unimodular(g.matrix);
        for (const auto& r : relators_) {
            const Isometry m = evaluate(r);
            const Isometry id = Isometry::identity();
            const Isometry neg{-1.0, 0.0, 0.0, -1.0};
            if (max_abs_entry_diff(m, id) > kRelatorTol &&
                max_abs_entry_diff(m, neg) > kRelatorTol)
                throw InvalidInput("relator does not evaluate to +-identity");
        }
    }

    int generator_count() const { return static_cast<int>(generators_.size()); }
    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<Word>& relators() const { return relators_; }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        out.reserve(generators_.size());
        for (const auto& g : generators_) out.push_back(g.label);
        return out;
    }

    Isometry evaluate(const Word& w) const { return evaluate_as<double>(w); }

    template <class R>
    Mat2<R> evaluate_as(const Word& w) const {
        Mat2<R> m = Mat2<R>::identity();
        for (const Letter l : w) {
            const std::size_t idx = static_cast<std::size_t>((l > 0 ? l : -l) - 1);
            if (idx >= generators_.size())
                throw InvalidInput("word letter outside generator range");
            const Mat2<R> g = generators_[idx].matrix.cast<R>();
            m = m * (l > 0 ? g : g.inverse());
        }
        return m;
    }

    /// Presentation with every generator replaced by s g s^-1.
    GroupPresentation conjugated(const Isometry& s) const {
        std::vector<Generator> gens = generators_;
        const Isometry si = s.inverse();
        for (auto& g : gens) g.matrix = s * g.matrix * si;
        return GroupPresentation(std::move(gens), relators_);
    }

private:
    std::vector<Generator> generators_;
    std::vector<Word> relators_;
};

/// Genus-2 surface group of the regular hyperbolic octagon with opposite side
/// pairing. The four generators are rotated copies of a fixed translation of
/// trace 2 + 2 sqrt(2); every word trace lies in Z[sqrt(2)], and the single
/// octagon relator a b' c d' a' b c' d evaluates to the identity. Entries are
/// evaluated in extended precision and rounded once to double.
inline GroupPresentation bolza_generators() {
    const long double rt2 = std::sqrt(2.0L);
    const long double p = 1.0L + rt2;             // cosh of half the side translation
    const long double beta = std::sqrt(2.0L + 2.0L * rt2);
    const long double h = std::sqrt(1.0L + rt2);  // beta / sqrt(2)

    auto mk = [](long double a, long double b, long double c, long double d) {
        return Isometry{static_cast<double>(a), static_cast<double>(b),
                        static_cast<double>(c), static_cast<double>(d)};
    };
    std::vector<Generator> gens = {
        {"a", mk(p + beta, 0.0L, 0.0L, p - beta)},
        {"b", mk(p + h, -h, -h, p - h)},
        {"c", mk(p, -beta, -beta, p)},
        {"d", mk(p - h, -h, -h, p + h)},
    };
    const Word relator = {1, -2, 3, -4, -1, 2, -3, 4};
    return GroupPresentation(std::move(gens), {relator});
}

/// Cyclic group generated by a single axis translation of displacement l.
inline GroupPresentation cyclic_translation(double l) {
    if (!(l > 0)) throw InvalidInput("cyclic preset needs a positive length");
    return GroupPresentation({{"a", Isometry::axis_translation(l)}});
}

/// Finite-order rotation about i; has no hyperbolic words at all.
inline GroupPresentation elliptic_rotation(double angle) {
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    return GroupPresentation({{"r", Isometry{c, s, -s, c}}});
}

} // namespace teichlen
