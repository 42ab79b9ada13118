#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "teichlen/bounds.hpp"
#include "teichlen/number_field.hpp"
#include "teichlen/report.hpp"

using namespace teichlen;
using Catch::Approx;

TEST_CASE("minimal loop bound: value, domination, asymptotics") {
    const long double oracle =
        2.0L * std::acosh(1.0L / (2.0L * std::sin(static_cast<long double>(M_PI) / 18.0L)));
    CHECK(minimal_loop_bound(2) == Approx(static_cast<double>(oracle)).epsilon(1e-13));
    CHECK(minimal_loop_bound(2) == Approx(3.43821).margin(1e-4));
    CHECK(minimal_loop_bound(2) < 2.0 * std::log(8.0));
    CHECK(2.0 * std::log(8.0) == Approx(4.1589).margin(1e-4));

    // slow approach of the ratio to 2 log(12g) toward 1
    const double r6 = minimal_loop_bound(1000000) / (2.0 * std::log(12.0e6));
    CHECK(r6 == Approx(0.9297).margin(2e-3));
    const double r9 = minimal_loop_bound(1000000000) / (2.0 * std::log(12.0e9));
    CHECK(std::abs(r9 - 1.0) < std::abs(r6 - 1.0));
}

TEST_CASE("loop bound domination over the sweep") {
    for (std::int64_t g = 2; g <= 1000; ++g)
        CHECK(minimal_loop_bound(g) < 2.0 * std::log(4.0 * static_cast<double>(g)));
    for (const std::int64_t g : {10000LL, 100000LL, 1000000LL})
        CHECK(minimal_loop_bound(g) < 2.0 * std::log(4.0 * static_cast<double>(g)));
}

TEST_CASE("collar width: fixed point, value, monotonicity") {
    const double fixed = 2.0 * std::asinh(1.0);
    CHECK(collar_width(fixed) == Approx(std::asinh(1.0)).epsilon(1e-12));
    CHECK(collar_width(2.0) == Approx(std::asinh(1.0 / std::sinh(1.0))).epsilon(1e-12));
    CHECK(collar_width(2.0) == Approx(0.771937).margin(1e-5));
    double prev = collar_width(0.01);
    for (double l = 0.05; l <= 20.0; l += 0.05) {
        const double w = collar_width(l);
        CHECK(w < prev);
        prev = w;
    }
}

TEST_CASE("collar distance bound") {
    CHECK(collar_distance_bound(2.0 * std::asinh(1.0) + 1e-15) == Approx(0.0).margin(1e-12));
    CHECK(collar_distance_bound(4.0) == Approx(std::log(std::sinh(2.0))).epsilon(1e-12));
    CHECK(collar_distance_bound(4.0) == Approx(1.288367).margin(1e-5));
    CHECK_THROWS_AS(collar_distance_bound(1.0), NonPositiveBound);
    // stable at large arguments
    CHECK(collar_distance_bound(2000.0) == Approx(1000.0 - std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("curve, chain and arc bounds") {
    const auto b = curve_chain_arc_bounds(2, 1.0);
    const double w = std::asinh(1.0 / std::sinh(0.5));
    CHECK(b.curve == Approx(2.0 * std::log(8.0)).epsilon(1e-13));
    CHECK(b.chain == Approx(8.0 * std::log(8.0) + 4.0 * w).epsilon(1e-13));
    CHECK(b.arc == Approx(2.0 * std::log(8.0) + 2.0 * w).epsilon(1e-13));
    // exact identity between the displayed formulas
    CHECK(b.arc == b.curve + 2.0 * w);
    // arcsinh terms vanish in the thick limit
    const auto thick = curve_chain_arc_bounds(2, 1e3);
    CHECK(thick.chain == Approx(8.0 * std::log(8.0)).margin(1e-12));
}

TEST_CASE("system length bound and curve cap") {
    const auto sb = system_length_bound(2, 0.1733);
    CHECK(sb.max_curves == 15);
    CHECK(sb.length_bound ==
          Approx(20.0 * std::log(8.0) + 8.0 * std::asinh(1.0 / std::sinh(0.08665)))
              .epsilon(1e-4));
    CHECK(system_length_bound(3, 1.0).max_curves == 30);
    CHECK(system_length_bound(2, 1e3).length_bound ==
          Approx(20.0 * std::log(8.0)).margin(1e-12));
}

TEST_CASE("logarithmic systole floor") {
    CHECK(log_genus_systole_floor(std::exp(3.0)) == Approx(4.0).epsilon(1e-12));
    CHECK(log_genus_systole_floor(2.0) == Approx(4.0 / 3.0 * std::log(2.0)).epsilon(1e-12));
    // ratio of the system bound to the floor drifts toward 15 from above
    auto ratio = [](double g) {
        return (20.0 * std::log(4.0 * g) + 8.0 * std::asinh(1.0 / std::sinh(0.5))) /
               log_genus_systole_floor(g);
    };
    const double r6 = ratio(1e6);
    CHECK(r6 == Approx(17.13).margin(0.05));
    CHECK(std::abs(ratio(1e12) - 15.0) < 0.10 * 15.0);
    CHECK(std::abs(ratio(1e12) - 15.0) < std::abs(r6 - 15.0));
}

TEST_CASE("log length of the squared trace and its derivative") {
    const double x0 = 2.0 + 2.0 * std::cosh(1.0);
    CHECK(log_length_from_trace_square(x0) == Approx(0.0).margin(1e-12));
    CHECK_THROWS_AS(log_length_from_trace_square(4.0), DomainError);
    CHECK_THROWS_AS(log_length_from_trace_square_derivative(3.9), DomainError);

    // finite differences at x = 5
    const double h = 1e-6;
    const double fd =
        (log_length_from_trace_square(5.0 + h) - log_length_from_trace_square(5.0 - h)) /
        (2.0 * h);
    CHECK(log_length_from_trace_square_derivative(5.0) == Approx(fd).epsilon(1e-6));
}

TEST_CASE("derivative dominates 1/x^2 on a log grid") {
    const double lo = std::log(4.0 + 1e-6), hi = std::log(1e9);
    for (int i = 0; i <= 2000; ++i) {
        const double x = std::exp(lo + (hi - lo) * i / 2000.0);
        CHECK(log_length_from_trace_square_derivative(x) > 1.0 / (x * x));
    }
}

TEST_CASE("distance lower bound in log space") {
    const double c2 = default_length_constant(2);
    const DistanceBoundInputs in{2, 2, c2, gap_constant(2)};
    const auto out = distance_lower_bound(in);
    const double logA = std::log(in.c_gap) - std::log(16.0) - 4.0 * c2;
    CHECK(out.log_value == Approx(logA - 240.0 * std::log(2.0)).margin(1e-12));
    CHECK(out.log_theta_max ==
          Approx(std::log(4.0) + 2.0 * c2 + 120.0 * std::log(2.0)).margin(1e-12));

    // linear in the gap constant
    const auto doubled =
        distance_lower_bound({2, 2, c2, 2.0 * gap_constant(2)});
    CHECK(doubled.log_value - out.log_value == Approx(std::log(2.0)).margin(1e-12));

    // exact power law in g
    const auto a = distance_lower_bound({1000, 2, c2, gap_constant(2)});
    const auto b = distance_lower_bound({1000000, 2, c2, gap_constant(2)});
    CHECK(a.log_value - b.log_value == Approx(240.0 * std::log(1000.0)).margin(1e-9));

    // strictly decreasing in g, increasing in c_gap
    CHECK(a.log_value > b.log_value);
    CHECK(doubled.log_value > out.log_value);
}

TEST_CASE("topological type count bound") {
    const auto t2 = topo_types_bound(2);
    const double expect =
        std::log(3.0) + 2.0 * std::log(4.0) - 6.0 + (6.0 * std::log(12.0) - 5.0);
    CHECK(t2.log_value == Approx(expect).margin(1e-12));

    // the computed base dominates the sweep by construction; spot check it
    const double B = t2.base;
    for (const std::int64_t g : {2LL, 3LL, 17LL, 100LL, 9999LL}) {
        const auto t = topo_types_bound(g);
        CHECK(t.log_value <=
              static_cast<double>(g) * std::log(B) +
                  6.0 * static_cast<double>(g) * std::log(static_cast<double>(g)) + 1e-9);
    }

    // ratio drifts toward 6
    auto ratio = [](std::int64_t g) {
        return topo_types_bound(g).log_value /
               (static_cast<double>(g) * std::log(static_cast<double>(g)));
    };
    CHECK(ratio(1000000) == Approx(6.7171).margin(1e-2));
    CHECK(std::abs(ratio(100000000) - 6.0) < std::abs(ratio(1000000) - 6.0));
}

TEST_CASE("counting bounds: log space agrees with direct evaluation") {
    const CountingInputs in{3, 2, 1.0, 1.0, std::exp(1.0), 1.0};
    const auto out = sa_counting_bounds(in);

    // direct long double product, representable for these parameters
    const long double g = 3.0L;
    long double direct = std::pow(static_cast<long double>(M_E), g) * std::pow(g, 6.0L * g);
    const long double inner = 2.0L * 2.0L * std::pow(8.0L, 4.0L) * std::pow(3.0L, 80.0L);
    direct *= std::pow(inner, 15.0L * (g - 1.0L));
    CHECK(out.log_upper == Approx(static_cast<double>(std::log(direct))).epsilon(1e-9));

    const long double lower = std::pow(1.0L * g, 2.0L * g);
    CHECK(out.log_lower == Approx(static_cast<double>(std::log(lower))).epsilon(1e-12));
}

TEST_CASE("counting bounds: upper dominates lower and C caps the ratio") {
    const double B = topo_types_bound(2).base;
    for (const int d : {2, 3}) {
        const double sigma = default_sigma(d, 1.0);
        for (std::int64_t g = 3; g <= 100; g += 7) {
            const auto out = sa_counting_bounds({g, d, 1.0, sigma, B, 1.0});
            CHECK(out.log_lower <= out.log_upper);
            const double glogg = static_cast<double>(g) * std::log(static_cast<double>(g));
            CHECK(out.log_upper / glogg <= out.C);
        }
    }
    // lower bound ratio tends to 2
    const auto big = sa_counting_bounds({1000, 2, 1.0, 1.0, B, 1.0});
    CHECK(big.log_lower / (1000.0 * std::log(1000.0)) == Approx(2.0).epsilon(1e-2));
}

TEST_CASE("quasiconformal distortion window") {
    CHECK(qc_length_distortion_check(1.0, 1.0, 1.0).pass);
    CHECK_FALSE(qc_length_distortion_check(1.0, 1.0, 1.0 + 1e-9).pass);
    CHECK(qc_length_distortion_check(2.0, 1.0, 1.5).pass);
    CHECK_FALSE(qc_length_distortion_check(2.0, 1.0, 2.5).pass);
    CHECK(qc_length_distortion_check(2.0, 1.0, 0.5).pass);
    CHECK_FALSE(qc_length_distortion_check(2.0, 1.0, 0.49).pass);
}

TEST_CASE("bound report JSON schema") {
    BoundReport r;
    r.name = "demo";
    r.inputs = {{"g", 2.0}};
    r.lhs = 1.0;
    r.rhs = 2.0;
    r.pass = true;
    r.citation = "demo citation";
    const auto j = to_json(r);
    CHECK(j["name"] == "demo");
    CHECK(j["inputs"]["g"] == 2.0);
    CHECK(j["lhs"] == 1.0);
    CHECK(j["rhs"] == 2.0);
    CHECK(j["pass"] == true);
    CHECK(j["citation"] == "demo citation");
    CHECK(!j.contains("note"));
}
