#include <doctest.h>

#include <cmath>

#include "solvspec/quadrature.hpp"

using namespace solvspec;
namespace quad = solvspec::quadrature;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("the 15-point rule integrates polynomials up to degree 22 exactly") {
    for (int k = 0; k <= 22; ++k) {
        double err = 0.0;
        const double got =
            quad::gauss_kronrod_15([k](double x) { return std::pow(x, k); }, 0.0, 1.0, &err);
        CHECK(got == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
    }
    // Degree 23 is the first the embedded Gauss rule misses; the error
    // estimate must notice.
    double err = 0.0;
    quad::gauss_kronrod_15([](double x) { return std::pow(x, 23); }, 0.0, 2.0, &err);
    CHECK(err > 0.0);
}

TEST_CASE("adaptive integration handles peaked integrands") {
    const double got = quad::integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(got == doctest::Approx(2.0).epsilon(1e-10));

    // Narrow Lorentzian peak inside a wide interval.
    const double peak = quad::integrate(
        [](double x) { return 1.0 / (1.0 + 1e6 * (x - 0.3) * (x - 0.3)); }, 0.0, 100.0,
        {1e-9, 0.0, 48});
    CHECK(peak == doctest::Approx((std::atan(99.7e3) + std::atan(300.0)) / 1e3)
                      .epsilon(1e-7));
}

TEST_CASE("semi-infinite integration converges for decaying tails") {
    const double e = quad::integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0,
                                                 1.0, {1e-10, 0.0, 48});
    CHECK(e == doctest::Approx(1.0).epsilon(1e-9));
    const double arctan = quad::integrate_to_infinity(
        [](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, {1e-10, 0.0, 48});
    CHECK(arctan == doctest::Approx(M_PI / 2.0).epsilon(1e-9));
}

TEST_CASE("semi-infinite integration reports non-decaying tails") {
    CHECK_THROWS_AS(quad::integrate_to_infinity([](double x) { return 1.0 / (1.0 + x); }, 0.0,
                                                1.0, {1e-10, 0.0, 48}),
                    NumericError);
    CHECK_THROWS_AS(
        quad::integrate_to_infinity([](double) { return 0.5; }, 0.0, 1.0, {1e-10, 0.0, 48}),
        NumericError);
}

TEST_CASE("cosine transform of a Lorentzian envelope") {
    // integral of cos(w t)/(1+w^2) over [0, inf) = (pi/2) exp(-t)
    for (double t : {0.7, 3.0, 25.0}) {
        const double got = quad::fourier_cos([](double w) { return 1.0 / (1.0 + w * w); }, t,
                                             0.0, 1e6, {1e-9, 1e-12, 48});
        CHECK(got == doctest::Approx(M_PI / 2.0 * std::exp(-t)).epsilon(1e-7));
    }
}

TEST_CASE("sine transform with a 1/w envelope") {
    // integral of sin(w t)/(w (1+w^2)) over [0, inf) = (pi/2)(1 - exp(-t))
    for (double t : {0.5, 2.0, 12.0}) {
        const double got =
            quad::fourier_sin([](double w) { return 1.0 / (w * (1.0 + w * w)); }, t, 0.0, 1e6,
                              {1e-9, 1e-12, 48});
        CHECK(got == doctest::Approx(M_PI / 2.0 * (1.0 - std::exp(-t))).epsilon(1e-7));
    }
}

TEST_SUITE_END();
