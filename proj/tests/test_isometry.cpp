#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "teichlen/isometry.hpp"
#include "teichlen/mat2.hpp"

using namespace teichlen;
using Catch::Approx;

namespace {

Isometry diag(double l) { return Isometry::axis_translation(l); }

/// Random matrix with entries in [-10, 10] projected to det 1.
Isometry random_unimodular(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    while (true) {
        const double a = dist(rng), b = dist(rng), c = dist(rng);
        if (std::abs(a) < 0.2) continue;
        const double d = (1.0 + b * c) / a;
        if (std::abs(d) > 10.0) continue;
        return Isometry{a, b, c, d};
    }
}

/// Random hyperbolic element: a conjugated axis translation.
Isometry random_hyperbolic(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> len(0.2, 4.0);
    const Isometry s = random_unimodular(rng);
    return s * diag(len(rng)) * s.inverse();
}

} // namespace

TEST_CASE("compose: identity, inverse, diagonal cases") {
    const Isometry id = Isometry::identity();
    CHECK(max_abs_entry_diff(compose(id, id), id) == 0.0);

    const Isometry t{2.0, 0.0, 0.0, 0.5};
    CHECK(max_abs_entry_diff(compose(t, t.inverse()), id) < 1e-15);

    const Isometry u{3.0, 0.0, 0.0, 1.0 / 3.0};
    const Isometry prod = compose(t, u);
    CHECK(prod.a == Approx(6.0));
    CHECK(prod.d == Approx(1.0 / 6.0));
    CHECK(prod.b == 0.0);
    CHECK(prod.c == 0.0);
}

TEST_CASE("classify trichotomy") {
    CHECK(classify(Isometry{1.0, 1.0, 0.0, 1.0}) == IsometryClass::Parabolic);
    CHECK(classify(diag(1.0)) == IsometryClass::Hyperbolic);
    const double c = std::cos(M_PI / 6.0), s = std::sin(M_PI / 6.0);
    CHECK(classify(Isometry{c, s, -s, c}) == IsometryClass::Elliptic);
    CHECK(classify(Isometry::identity()) == IsometryClass::IdentityLike);
    CHECK(classify(Isometry{-1.0, 0.0, 0.0, -1.0}) == IsometryClass::IdentityLike);
}

TEST_CASE("translation_length on the diagonal and at the boundary") {
    CHECK(translation_length(diag(1.0)) == Approx(1.0).epsilon(1e-12));

    // trace 2 + 2 sqrt(2): length checked against an extended-precision oracle
    const long double tr = 2.0L + 2.0L * std::sqrt(2.0L);
    const long double oracle = 2.0L * std::acosh(tr / 2.0L);
    const double half = static_cast<double>(tr) / 2.0;
    const Isometry m{half + std::sqrt(half * half - 1.0), 0.0, 0.0,
                     half - std::sqrt(half * half - 1.0)};
    CHECK(translation_length(m) == Approx(static_cast<double>(oracle)).epsilon(1e-12));
    CHECK(static_cast<double>(oracle) == Approx(3.05714183896).epsilon(1e-10));

    CHECK_THROWS_AS(translation_length(Isometry{1.0, 1.0, 0.0, 1.0}), NotHyperbolic);
}

TEST_CASE("eigen_lambda matches quadratic-formula oracles") {
    CHECK(eigen_lambda(diag(1.0)) == Approx(std::exp(1.0)).epsilon(1e-12));

    // trace 3: lambda is the largest root of x^2 - 7x + 1 (tr T^2 = 7)
    const Isometry t3{3.0, 1.0, -1.0, 0.0};
    REQUIRE(t3.det() == Approx(1.0));
    const long double lam = (7.0L + std::sqrt(49.0L - 4.0L)) / 2.0L;
    CHECK(eigen_lambda(t3) == Approx(static_cast<double>(lam)).epsilon(1e-12));

    // trace 2 + 2 sqrt(2): lambda = exp(translation length)
    const double tr = 2.0 + 2.0 * std::sqrt(2.0);
    const Isometry m{tr, -1.0, 1.0, 0.0};
    const long double len = 2.0L * std::acosh(static_cast<long double>(tr) / 2.0L);
    CHECK(eigen_lambda(m) == Approx(static_cast<double>(std::exp(len))).epsilon(1e-10));

    CHECK_THROWS_AS(eigen_lambda(Isometry::identity()), NotHyperbolic);
}

TEST_CASE("trace_of_square equals trace^2 - 2") {
    CHECK(trace_of_square(Isometry{1.0, 1.0, 0.0, 1.0}) == Approx(2.0));
    CHECK(trace_of_square(Isometry{3.0, 1.0, -1.0, 0.0}) == Approx(7.0));

    const double tr = 2.0 + 2.0 * std::sqrt(2.0);
    const Isometry m{tr, -1.0, 1.0, 0.0};
    // direct extended-precision matrix-square oracle
    const Mat2<long double> ml = m.cast<long double>();
    const long double oracle = (ml * ml).trace();
    CHECK(trace_of_square(m) == Approx(static_cast<double>(oracle)).epsilon(1e-13));
    CHECK(static_cast<double>(oracle) ==
          Approx(10.0 + 8.0 * std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("determinant is preserved by 1e4 random compositions") {
    // Full-range [-10, 10] entries make the product entries reach 2e2, where
    // rounding the product entries alone moves the determinant by up to a few
    // 1e-12; 1e-11 is the provable envelope for this stress shape.
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 10000; ++i) {
        const Isometry a = random_unimodular(rng);
        const Isometry b = random_unimodular(rng);
        CHECK(std::abs(compose(a, b).det() - 1.0) < 1e-11);
    }
}

TEST_CASE("determinant stays within the 1e-12 contract on isometry products") {
    std::mt19937_64 rng(31415);
    std::uniform_real_distribution<double> small(-1.2, 1.2);
    std::uniform_real_distribution<double> len(0.2, 2.0);
    auto conj_translation = [&] {
        while (true) {
            const double a = small(rng), b = small(rng), c = small(rng);
            if (std::abs(a) < 0.4) continue;
            const double d = (1.0 + b * c) / a;
            if (std::abs(d) > 1.5) continue;
            const Isometry s{a, b, c, d};
            return s * diag(len(rng)) * s.inverse();
        }
    };
    for (int i = 0; i < 10000; ++i) {
        const Isometry a = conj_translation();
        const Isometry b = conj_translation();
        CHECK(std::abs(compose(a, b).det() - 1.0) < 1e-12);
    }
}

TEST_CASE("translation length is a conjugation invariant") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Isometry t = random_hyperbolic(rng);
        const Isometry s = random_unimodular(rng);
        const Isometry conj = s * t * s.inverse();
        CHECK(translation_length(conj) ==
              Approx(translation_length(t)).margin(1e-9));
    }
}

TEST_CASE("exp(translation_length) == eigen_lambda") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const Isometry t = random_hyperbolic(rng);
        CHECK(std::exp(translation_length(t)) ==
              Approx(eigen_lambda(t)).epsilon(1e-9));
    }
}

TEST_CASE("trace of the square identity holds for arbitrary unimodular input") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 2000; ++i) {
        const Isometry t = random_unimodular(rng);
        const double tr = t.trace();
        CHECK(trace_of_square(t) == Approx(tr * tr - 2.0).margin(1e-10));
    }
}
