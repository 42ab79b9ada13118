#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "teichlen/errors.hpp"
#include "teichlen/hexagon.hpp"
#include "teichlen/isometry.hpp"
#include "teichlen/mat2.hpp"
#include "teichlen/report.hpp"

namespace teichlen {

/// Pair of pants given by its three boundary geodesic lengths.
struct YPiece {
    double l1, l2, l3;

    YPiece(double a, double b, double c) : l1(a), l2(b), l3(c) {
        if (!(a > 0 && b > 0 && c > 0)) throw InvalidInput("Y-piece lengths must be positive");
        if (!(a < 100 && b < 100 && c < 100))
            throw InvalidInput("Y-piece lengths capped at 100");
    }
};

/// Two Y-pieces glued along their first boundary (common length l_glue) with a
/// twist. The twist lives on the real line; its geometric effect is periodic
/// with period l_glue up to remarking. twist = 0 aligns the feet of the two
/// perpendicular arcs chosen below; positive twist slides the far side toward
/// the attracting end of the oriented gluing axis.
struct XPiece {
    double l_glue;
    YPiece y1, y2;
    double twist;

    XPiece(double lg, YPiece a, YPiece b, double alpha)
        : l_glue(lg), y1(a), y2(b), twist(alpha) {
        if (std::abs(y1.l1 - lg) > 1e-12 || std::abs(y2.l1 - lg) > 1e-12)
            throw InvalidInput("glued boundaries must both have length l_glue");
    }
};

namespace detail {

/// Holonomy of the pants (l1, l2, l3), first boundary on the imaginary axis:
///   A = diag translation by l1,
///   B = P T(-l2) P^{-1} with P the translation by the common perpendicular
///       along the geodesic (-1, 1) through i.
/// Then |tr(AB)| = 2 cosh(l3/2), so A, B, (AB)^{-1} realize the three
/// boundaries; the group is the standard discrete pants representation with
/// the B-axis in the half plane Re z > 0.
template <class R>
std::pair<Mat2<R>, Mat2<R>> pants_group(R l1, R l2, R l3) {
    const auto hp = pants_half_perpendicular(l1, l2, l3);
    const Mat2<R> P{hp.ch, hp.sh, hp.sh, hp.ch};
    const Mat2<R> A = Mat2<R>::axis_translation(l1);
    const Mat2<R> B = P * Mat2<R>::axis_translation(-l2) * P.inverse();
    return {A, B};
}

/// Second-pants generator of an X-piece at the given twist: mirrored to the
/// half plane Re z < 0 and conjugated by the twist translation along the
/// gluing axis.
template <class R>
Mat2<R> cross_generator(R l_glue, R l2, R l3, R twist) {
    const Mat2<R> B = pants_group(l_glue, l2, l3).second.mirrored();
    const Mat2<R> tw = Mat2<R>::axis_translation(twist);
    return tw * B * tw.inverse();
}

template <class R>
R length_of(const Mat2<R>& m) {
    const R at = std::abs(m.trace());
    if (!(at > R(2))) throw NotHyperbolic("crossing word is not hyperbolic");
    return R(2) * std::acosh(at / R(2));
}

} // namespace detail

/// Matrix realization: A and B hyperbolic with translation lengths l1 and l2,
/// and (AB)^{-1} of length l3.
template <class R>
std::pair<Mat2<R>, Mat2<R>> ypiece_group_t(R l1, R l2, R l3) {
    if (!(l1 > 0 && l2 > 0 && l3 > 0)) throw InvalidInput("Y-piece lengths must be positive");
    return detail::pants_group(l1, l2, l3);
}

inline std::pair<Isometry, Isometry> ypiece_group(const YPiece& y) {
    return ypiece_group_t<double>(y.l1, y.l2, y.l3);
}

template <class R>
struct CrossLengths {
    R delta;
    R eta;
};

/// Lengths of the two crossing geodesics of an X-piece. delta is the closed
/// geodesic of the class d * gamma1 * d^{-1} * gamma2 (d the arc through the
/// gluing curve), realized as the word B1 * B2(twist)^{-1}; eta is the image
/// of delta under a full twist, realized by conjugating the far generator with
/// the gluing translation, and therefore has the length of delta at
/// twist + l_glue.
template <class R>
CrossLengths<R> xpiece_cross_lengths_t(R l_glue, R y1_l2, R y1_l3, R y2_l2, R y2_l3, R twist) {
    const Mat2<R> B1 = detail::pants_group(l_glue, y1_l2, y1_l3).second;
    const Mat2<R> B2 = detail::cross_generator(l_glue, y2_l2, y2_l3, twist);
    const Mat2<R> g = Mat2<R>::axis_translation(l_glue);
    const Mat2<R> B2_turn = g * B2 * g.inverse();
    return {detail::length_of(B1 * B2.inverse()),
            detail::length_of(B1 * B2_turn.inverse())};
}

inline CrossLengths<double> xpiece_cross_lengths(const XPiece& x) {
    return xpiece_cross_lengths_t<double>(x.l_glue, x.y1.l2, x.y1.l3, x.y2.l2, x.y2.l3,
                                          x.twist);
}

/// Perpendicular arcs of the crossing construction: from the gluing boundary
/// to the second boundary inside each pants.
inline double xpiece_arc1(const XPiece& x) {
    return pants_perpendicular(x.l_glue, x.y1.l2, x.y1.l3);
}
inline double xpiece_arc2(const XPiece& x) {
    return pants_perpendicular(x.l_glue, x.y2.l2, x.y2.l3);
}

/// Number of scan points per period used for branch bracketing.
inline constexpr int kTwistScanPoints = 10000;

/// Recovers the twist from the two crossing lengths: scans the monotone
/// branches of delta(twist) over [0, l_glue), bisects each bracket to 1e-9,
/// and keeps the candidates consistent with the eta target within 1e-5. The
/// smallest consistent twist is returned (symmetric pieces can match twice).
inline double twist_recover(const XPiece& shape, double ldelta_target, double leta_target) {
    const double lg = shape.l_glue;
    auto delta_at = [&](double a) {
        return xpiece_cross_lengths_t<double>(lg, shape.y1.l2, shape.y1.l3, shape.y2.l2,
                                              shape.y2.l3, a)
            .delta;
    };
    auto eta_at = [&](double a) {
        return xpiece_cross_lengths_t<double>(lg, shape.y1.l2, shape.y1.l3, shape.y2.l2,
                                              shape.y2.l3, a)
            .eta;
    };

    std::vector<double> candidates;
    const int n = kTwistScanPoints;
    double prev_x = 0, prev_f = delta_at(0) - ldelta_target;
    if (prev_f == 0) candidates.push_back(0);
    for (int i = 1; i <= n; ++i) {
        const double x = lg * i / n;
        const double f = delta_at(x) - ldelta_target;
        if (f == 0) {
            candidates.push_back(x);
        } else if (prev_f * f < 0) {
            double lo = prev_x, hi = x, flo = prev_f;
            while (hi - lo > 1e-9 * std::max(1.0, lg)) {
                const double mid = (lo + hi) / 2;
                const double fm = delta_at(mid) - ldelta_target;
                if (flo * fm <= 0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            candidates.push_back((lo + hi) / 2);
        }
        prev_x = x;
        prev_f = f;
    }

    double best = -1;
    for (const double a : candidates) {
        if (std::abs(eta_at(a) - leta_target) >= 1e-5) continue;
        if (best < 0 || a < best) best = a;
    }
    if (best < 0)
        throw NoConsistentTwist("no twist matches both crossing lengths within 1e-5");
    return best >= lg ? 0.0 : best;
}

/// Chain inequality l(chain) <= 2 l(arc) + l(gamma') + l(gamma'').
inline BoundReport chain_length_bound_check(double l_a, double l_g1, double l_g2,
                                            double l_chain) {
    if (!(l_a > 0 && l_g1 > 0 && l_g2 > 0 && l_chain > 0))
        throw InvalidInput("chain bound inputs must be positive");
    BoundReport r;
    r.name = "chain length vs arc and boundaries";
    r.inputs = {{"l_arc", l_a}, {"l_gamma1", l_g1}, {"l_gamma2", l_g2}};
    r.lhs = l_chain;
    r.rhs = 2 * l_a + l_g1 + l_g2;
    r.pass = r.lhs <= r.rhs + 1e-9;
    r.citation = "broken-path bound for the chain of an arc";
    return r;
}

/// Strict crossing-geodesic inequality
///   l(delta) < l(gamma1) + l(gamma2) + 2 l(glue) + 2 l(a1) + 2 l(a2)
/// with the perpendicular arcs supplied by the caller (see xpiece_arc1/2).
inline BoundReport delta_bound_check(const XPiece& x, double la1, double la2) {
    if (!(la1 > 0 && la2 > 0)) throw InvalidInput("arcs must be positive");
    const auto cross = xpiece_cross_lengths(x);
    BoundReport r;
    r.name = "crossing geodesic length bound";
    r.inputs = {{"l_glue", x.l_glue}, {"l_gamma1", x.y1.l2}, {"l_gamma2", x.y2.l2},
                {"twist", x.twist},   {"l_a1", la1},         {"l_a2", la2}};
    r.lhs = cross.delta;
    r.rhs = x.y1.l2 + x.y2.l2 + 2 * x.l_glue + 2 * la1 + 2 * la2;
    r.pass = r.lhs < r.rhs;
    r.citation = "crossing geodesic vs broken path through the gluing curve";
    return r;
}

} // namespace teichlen
