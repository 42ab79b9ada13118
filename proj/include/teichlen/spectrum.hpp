#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <thread>
#include <vector>

#include "teichlen/errors.hpp"
#include "teichlen/isometry.hpp"
#include "teichlen/presentation.hpp"
#include "teichlen/report.hpp"
#include "teichlen/words.hpp"

namespace teichlen {

/// Lengths within this of each other land in the same multiplicity bucket.
inline constexpr double kLengthBucketTol = 1e-8;

struct SpectrumEntry {
    double length = 0;
    double trace_abs = 0;
    std::size_t multiplicity = 0;
    Word representative;
};

/// Sorted lower-approximation of the length spectrum. Completeness holds only
/// up to words of length max_word_length; longer geodesics below the cutoff
/// may be missing.
struct LengthSpectrum {
    std::vector<SpectrumEntry> entries;
    double cutoff = 0;
    std::size_t max_word_length = 0;
};

namespace detail {

struct RawEntry {
    double length;
    double trace_abs;
    Word word;
};

inline bool raw_entry_less(const RawEntry& x, const RawEntry& y) {
    if (x.length != y.length) return x.length < y.length;
    if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
    for (std::size_t i = 0; i < x.word.size(); ++i) {
        const int a = letter_rank(x.word[i]), b = letter_rank(y.word[i]);
        if (a != b) return a < b;
    }
    return false;
}

template <class R>
void collect_entries(const GroupPresentation& p, int max_len, double cutoff,
                     int first_letter, std::vector<RawEntry>& out) {
    for_each_cyclic_word(
        p.generator_count(), max_len,
        [&](const Word& w) {
            const Mat2<R> m = p.evaluate_as<R>(w);
            const R at = std::abs(m.trace());
            if (!(at > R(2) + R(kClassifyTol))) return;
            const double len = static_cast<double>(R(2) * std::acosh(at / R(2)));
            if (len <= cutoff)
                out.push_back({len, static_cast<double>(at), w});
        },
        first_letter);
}

} // namespace detail

/// Enumerates cyclic-class representatives up to max_len, keeps hyperbolic
/// words of translation length <= cutoff, and merges lengths agreeing within
/// 1e-8 into multiplicity buckets. Multiplicities bound conjugacy-class counts
/// from above (no true conjugacy test is attempted). Worker partitioning is by
/// first letter; results do not depend on the worker count.
template <class R = double>
LengthSpectrum length_spectrum(const GroupPresentation& p, int max_len, double cutoff,
                               int workers = 1) {
    if (!(cutoff > 0)) throw InvalidInput("length_spectrum needs cutoff > 0");
    const int slots = 2 * p.generator_count();
    std::vector<detail::RawEntry> raw;
    if (workers <= 1) {
        detail::collect_entries<R>(p, max_len, cutoff, -1, raw);
    } else {
        std::vector<std::vector<detail::RawEntry>> parts(static_cast<std::size_t>(slots));
        std::vector<std::thread> pool;
        const int n = std::min(workers, slots);
        // static round-robin assignment keeps the result independent of timing
        for (int t = 0; t < n; ++t) {
            pool.emplace_back([&, t] {
                for (int s = t; s < slots; s += n)
                    detail::collect_entries<R>(p, max_len, cutoff, s,
                                               parts[static_cast<std::size_t>(s)]);
            });
        }
        for (auto& th : pool) th.join();
        for (auto& part : parts)
            raw.insert(raw.end(), part.begin(), part.end());
    }
    std::sort(raw.begin(), raw.end(), detail::raw_entry_less);

    LengthSpectrum spec;
    spec.cutoff = cutoff;
    spec.max_word_length = static_cast<std::size_t>(max_len);
    for (const auto& e : raw) {
        if (!spec.entries.empty() &&
            e.length - spec.entries.back().length < kLengthBucketTol) {
            spec.entries.back().multiplicity += 1;
        } else {
            spec.entries.push_back({e.length, e.trace_abs, 1, e.word});
        }
    }
    return spec;
}

/// Minimum translation length over all enumerated words; a non-increasing
/// function of max_len. Throws NoHyperbolicWord when nothing hyperbolic shows
/// up within the budget.
template <class R = double>
double systole(const GroupPresentation& p, int max_len) {
    bool found = false;
    double best = 0;
    for_each_cyclic_word(p.generator_count(), max_len, [&](const Word& w) {
        const Mat2<R> m = p.evaluate_as<R>(w);
        const R at = std::abs(m.trace());
        if (!(at > R(2) + R(kClassifyTol))) return;
        const double len = static_cast<double>(R(2) * std::acosh(at / R(2)));
        if (!found || len < best) {
            best = len;
            found = true;
        }
    });
    if (!found) throw NoHyperbolicWord("no hyperbolic word up to the given length");
    return best;
}

/// Length bound of the short curve system: 20 log(4g) + 8 arcsinh(1/sinh(s/2)).
inline double short_system_bound(std::int64_t g, double s) {
    if (g < 2) throw InvalidInput("genus must be at least 2");
    if (!(s > 0)) throw InvalidInput("injectivity radius bound must be positive");
    return 20.0 * std::log(4.0 * static_cast<double>(g)) +
           8.0 * std::asinh(1.0 / std::sinh(s / 2.0));
}

/// Searches the enumerated spectrum for at least 15g-15 distinct length
/// classes below the short-system bound. This checks feasibility of the
/// length bound only; it says nothing about injectivity of the length map.
inline BoundReport short_system_check(const GroupPresentation& p, std::int64_t g, double s,
                                      int max_len, int workers = 1) {
    const double bound = short_system_bound(g, s);
    const std::int64_t required = 15 * g - 15;
    const LengthSpectrum spec = length_spectrum(p, max_len, bound, workers);
    const auto found = static_cast<std::int64_t>(spec.entries.size());
    BoundReport r;
    r.name = "short curve system feasibility";
    r.inputs = {{"g", static_cast<double>(g)},
                {"s", s},
                {"max_word_len", static_cast<double>(max_len)},
                {"length_bound", bound}};
    r.lhs = static_cast<double>(found);
    r.rhs = static_cast<double>(required);
    r.pass = found >= required;
    r.citation = "curve-and-chain system length bound";
    return r;
}

} // namespace teichlen
