#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "teichlen/io.hpp"
#include "teichlen/number_field.hpp"
#include "teichlen/presentation.hpp"
#include "teichlen/spectrum.hpp"

using namespace teichlen;
using Catch::Approx;

namespace {

FieldElement elem(const FieldPtr& f, std::vector<Rational> coords) {
    return FieldElement(std::move(coords), f);
}

} // namespace

TEST_CASE("field presets and embeddings") {
    const auto f = field_preset("sqrt2");
    CHECK(f->degree() == 2);
    CHECK(static_cast<double>(f->identity_root()) == Approx(std::sqrt(2.0)).epsilon(1e-14));

    const auto e = embed_all(elem(f, {Rational(0), Rational(1)}));
    CHECK(e[0] == Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(e[1] == Approx(-std::sqrt(2.0)).epsilon(1e-14));

    const auto r = embed_all(elem(f, {Rational(3), Rational(0)}));
    CHECK(r[0] == Approx(3.0));
    CHECK(r[1] == Approx(3.0));

    const auto s = embed_all(elem(f, {Rational(1), Rational(1)}));
    CHECK(s[0] == Approx(1.0 + std::sqrt(2.0)).epsilon(1e-13));
    CHECK(s[1] == Approx(1.0 - std::sqrt(2.0)).epsilon(1e-12));

    CHECK(field_preset("cubic")->degree() == 3);
    CHECK_THROWS_AS(field_preset("nope"), InvalidConfig);
}

TEST_CASE("a complex-rooted polynomial is rejected as a field") {
    CHECK_THROWS_AS(RealField(IntPolynomial({1, 0, 1})), InvalidInput);
    CHECK_THROWS_AS(RealField(IntPolynomial({1, 2, 1})), InvalidInput); // reducible
}

TEST_CASE("field norms") {
    const auto f = field_preset("sqrt2");
    CHECK(field_norm(elem(f, {Rational(1), Rational(1)})) == Approx(-1.0).margin(1e-10));
    CHECK(field_norm(elem(f, {Rational(3), Rational(0)})) == Approx(9.0).margin(1e-10));
    CHECK(field_norm(elem(f, {Rational(0), Rational(1)})) == Approx(-2.0).margin(1e-10));
}

TEST_CASE("integrality via the characteristic polynomial") {
    const auto f = field_preset("sqrt2");
    CHECK(is_integral(elem(f, {Rational(1), Rational(1)})));
    CHECK_FALSE(is_integral(elem(f, {Rational(1, 2), Rational(0)})));
    // half-integers are integral in sqrt5 when the parities match
    const auto f5 = field_preset("sqrt5");
    CHECK(is_integral(elem(f5, {Rational(1, 2), Rational(1, 2)})));
    CHECK_FALSE(is_integral(elem(f5, {Rational(1, 2), Rational(0)})));
}

TEST_CASE("norms of nonzero integral elements have absolute value >= 1") {
    const auto f = field_preset("sqrt2");
    std::mt19937_64 rng(512);
    std::uniform_int_distribution<int> coeff(-30, 30);
    int tested = 0;
    while (tested < 10000) {
        const int a = coeff(rng), b = coeff(rng);
        if (a == 0 && b == 0) continue;
        const auto x = elem(f, {Rational(a), Rational(b)});
        REQUIRE(is_integral(x));
        CHECK(std::abs(field_norm(x)) >= 1.0 - 1e-6);
        ++tested;
    }
}

TEST_CASE("gap constant is exactly 4^{-(d-1)}") {
    CHECK(gap_constant(1) == 1.0);
    CHECK(gap_constant(2) == 0.25);
    CHECK(gap_constant(3) == 0.0625 * 0.25 / 0.25 * 1.0 / 1.0); // 1/16
    CHECK(gap_constant(3) * std::pow(4.0, 2) == 1.0);
    CHECK(gap_constant(5) * 256.0 == 1.0);
}

TEST_CASE("verify_gap on rational traces") {
    const auto q = field_preset("rational");
    const auto r = verify_gap(elem(q, {Rational(3)}), elem(q, {Rational(4)}));
    CHECK(r.pass);
    CHECK(r.lhs == Approx(7.0));
    CHECK(r.rhs == 1.0);

    // rational elements of a quadratic field still face the window check:
    // both embeddings of 3^2 - 2 = 7 sit outside [-2, 2]
    const auto f = field_preset("sqrt2");
    CHECK_THROWS_AS(
        verify_gap(elem(f, {Rational(3), Rational(0)}), elem(f, {Rational(4), Rational(0)})),
        ArithmeticityViolated);
}

TEST_CASE("verify_gap passes on octagon-style traces") {
    const auto f = field_preset("sqrt2");
    // traces 2+2r2 and 6+4r2: conjugates 2-2r2, 6-4r2 with squares-2 inside [-2,2]
    const auto t = elem(f, {Rational(2), Rational(2)});
    const auto tp = elem(f, {Rational(6), Rational(4)});
    const auto r = verify_gap(t, tp);
    CHECK(r.pass);
    CHECK(r.rhs == 0.25);
    const double a = 2.0 + 2.0 * std::sqrt(2.0), b = 6.0 + 4.0 * std::sqrt(2.0);
    CHECK(r.lhs == Approx(std::abs(a * a - b * b)).epsilon(1e-12));
}

TEST_CASE("verify_gap rejects equal absolute traces and window violations") {
    const auto f = field_preset("sqrt2");
    const auto t = elem(f, {Rational(2), Rational(2)});
    CHECK_THROWS_AS(verify_gap(t, t), SameAbsTrace);

    // 3 sqrt(2): second embedding of t^2 - 2 is 16, far outside the window
    const auto bad = elem(f, {Rational(0), Rational(3)});
    const auto ok = elem(f, {Rational(2), Rational(2)});
    try {
        verify_gap(ok, bad);
        FAIL("expected ArithmeticityViolated");
    } catch (const ArithmeticityViolated& e) {
        CHECK(e.embedding_index == 1);
    }

    const auto half = elem(f, {Rational(1, 2), Rational(0)});
    const auto other = elem(f, {Rational(2), Rational(2)});
    CHECK_THROWS_AS(verify_gap(half, other), NonIntegral);
}

TEST_CASE("lattice rounding of harvested octagon traces") {
    const auto f = field_preset("sqrt2");
    const auto p = bolza_generators();
    const auto spec = length_spectrum(p, 5, 9.0);
    REQUIRE(!spec.entries.empty());
    for (const auto& e : spec.entries) {
        const auto rounded = round_to_lattice(e.trace_abs, f);
        REQUIRE(rounded.has_value());
        CHECK(rounded->residual < 1e-5);
        CHECK(is_integral(rounded->element));
    }
    // genuinely off-lattice value is rejected
    CHECK_FALSE(round_to_lattice(std::exp(1.0), f).has_value());
}

TEST_CASE("pairwise gap sweep over a small harvested set") {
    const auto f = field_preset("sqrt2");
    const auto spec = length_spectrum(bolza_generators(), 5, 9.0);
    std::vector<FieldElement> traces;
    for (const auto& e : spec.entries) {
        const auto r = round_to_lattice(e.trace_abs, f);
        REQUIRE(r.has_value());
        traces.push_back(r->element);
    }
    for (std::size_t i = 0; i < traces.size(); ++i) {
        for (std::size_t j = i + 1; j < traces.size(); ++j) {
            const auto r = verify_gap(traces[i], traces[j]);
            CHECK(r.pass);
            CHECK(r.lhs > 0.25);
        }
    }
}

TEST_CASE("lattice rounding works when the identity root is the smaller one") {
    const auto f = std::make_shared<RealField>(IntPolynomial({-2, 0, 1}), -1.5);
    REQUIRE(f->identity_index() == 0);
    const double v = 3.0 - 2.0 * std::sqrt(2.0);
    const auto r = round_to_lattice(v, f);
    REQUIRE(r.has_value());
    CHECK(r->residual < 1e-12);
    CHECK(r->element.coords[0] == Rational(3));
    CHECK(r->element.coords[1] == Rational(2)); // 3 + 2*theta with theta = -sqrt(2)
}

TEST_CASE("gap report JSON uses the flat schema") {
    const auto f = field_preset("sqrt2");
    const auto r = verify_gap(elem(f, {Rational(2), Rational(2)}),
                              elem(f, {Rational(6), Rational(4)}));
    const auto j = gap_report_to_json(r);
    CHECK(j.contains("t"));
    CHECK(j.contains("t_prime"));
    CHECK(j.contains("gap"));
    CHECK(j["bound"] == 0.25);
    CHECK(j["pass"] == true);
}

TEST_CASE("half-integer lattice rounding in sqrt5") {
    const auto f5 = field_preset("sqrt5");
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    const auto r = round_to_lattice(golden, f5);
    REQUIRE(r.has_value());
    CHECK(r->residual < 1e-9);
    CHECK(r->element.coords[0] == Rational(1, 2));
    CHECK(r->element.coords[1] == Rational(1, 2));
}
