#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "teichlen/errors.hpp"

namespace teichlen {

/// A letter is +k for generator k-1 and -k for its inverse, k >= 1.
using Letter = std::int8_t;
using Word = std::vector<Letter>;

constexpr Letter inverse_letter(Letter l) { return static_cast<Letter>(-l); }

/// Total order used for canonical rotation picking: generators interleaved
/// with their inverses (g0 < g0^-1 < g1 < g1^-1 < ...).
constexpr int letter_rank(Letter l) {
    const int idx = (l > 0 ? l : -l) - 1;
    return 2 * idx + (l < 0 ? 1 : 0);
}

inline bool freely_reduced(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == inverse_letter(w[i - 1])) return false;
    return true;
}

inline bool cyclically_reduced(const Word& w) {
    return w.size() < 2 || w.front() != inverse_letter(w.back());
}

namespace detail {

/// Lexicographic (by letter_rank) comparison of rotation r_s of w against w.
/// Returns true when the rotation is strictly smaller.
inline bool rotation_less(const Word& w, std::size_t s) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int lhs = letter_rank(w[(s + i) % n]);
        const int rhs = letter_rank(w[i]);
        if (lhs != rhs) return lhs < rhs;
    }
    return false;
}

} // namespace detail

/// A freely reduced word is kept as the representative of its cyclic-rotation
/// class when either (a) it is not cyclically reduced, in which case every
/// nontrivial rotation contains a cancelling pair and the word is the unique
/// reduced member of its class, or (b) it is the lexicographically smallest
/// rotation.
inline bool is_rotation_representative(const Word& w) {
    if (!cyclically_reduced(w)) return true;
    for (std::size_t s = 1; s < w.size(); ++s)
        if (detail::rotation_less(w, s)) return false;
    return true;
}

/// Count of freely reduced words of exact length n over k free generators:
/// 2k (2k-1)^{n-1}.
inline std::uint64_t reduced_word_count(int k, int n) {
    if (k < 1 || n < 1) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(2 * k);
    for (int i = 1; i < n; ++i) r *= static_cast<std::uint64_t>(2 * k - 1);
    return r;
}

/// Depth-first generation of all freely reduced words of length <= max_len.
/// `visit` receives each word once; restrict to a single first letter with
/// `first` (0-based rank) to partition work across threads.
template <class Visit>
void for_each_reduced_word(int k, int max_len, Visit&& visit, int first = -1) {
    if (k < 1) throw InvalidInput("word enumeration needs at least one generator");
    if (max_len < 1) throw InvalidInput("word enumeration needs max_len >= 1");
    std::vector<Letter> alphabet;
    alphabet.reserve(2 * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        alphabet.push_back(static_cast<Letter>(i + 1));
        alphabet.push_back(static_cast<Letter>(-(i + 1)));
    }
    Word w;
    w.reserve(static_cast<std::size_t>(max_len));
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == max_len) return;
        for (const Letter l : alphabet) {
            if (!w.empty() && l == inverse_letter(w.back())) continue;
            if (w.empty() && first >= 0 && letter_rank(l) != first) continue;
            w.push_back(l);
            visit(const_cast<const Word&>(w));
            self(self);
            w.pop_back();
        }
    };
    dfs(dfs);
}

/// Same as above filtered to one representative per cyclic-rotation class.
template <class Visit>
void for_each_cyclic_word(int k, int max_len, Visit&& visit, int first = -1) {
    for_each_reduced_word(
        k, max_len,
        [&](const Word& w) {
            if (is_rotation_representative(w)) visit(w);
        },
        first);
}

/// Human-readable form: generator labels, apostrophe marks an inverse.
inline std::string word_to_string(const Word& w, const std::vector<std::string>& labels) {
    std::string s;
    for (const Letter l : w) {
        const std::size_t idx = static_cast<std::size_t>((l > 0 ? l : -l) - 1);
        if (idx >= labels.size()) throw InvalidInput("word letter outside generator range");
        s += labels[idx];
        if (l < 0) s += '\'';
    }
    return s;
}

} // namespace teichlen
