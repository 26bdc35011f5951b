#include "ilvr/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ilvr;

TEST_CASE("polynomials are exact on one panel") {
    for (int k = 0; k <= 20; ++k) {
        const quad::Result r = quad::integrate([k](double x) { return std::pow(x, k); }, 0.0, 1.0);
        CHECK(r.value == doctest::Approx(1.0 / (k + 1)).epsilon(1e-14));
        CHECK(r.converged);
    }
    CHECK(quad::integrate([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
}

TEST_CASE("Gaussian over a window") {
    const quad::Result r =
        quad::integrate([](double u) { return std::exp(-u * u); }, -8.0, 8.0);
    CHECK(r.value == doctest::Approx(std::sqrt(std::numbers::pi) * std::erf(8.0)).epsilon(1e-13));
    CHECK(r.converged);
}

TEST_CASE("endpoint singularity and oscillation against an independent integrator") {
    const quad::Options tight{.abs_tol = 1e-14, .rel_tol = 1e-12};
    const quad::Result root = quad::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, tight);
    CHECK(root.value == doctest::Approx(2.0 / 3.0).epsilon(1e-11));
    CHECK(root.evaluations > 15);

    auto wiggle = [](double x) { return std::sin(40.0 * x) * std::exp(-x); };
    const double reference =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(wiggle, 0.0, 5.0, 20, 1e-14);
    const quad::Result r = quad::integrate(wiggle, 0.0, 5.0, tight);
    CHECK(r.value == doctest::Approx(reference).epsilon(1e-11));
    CHECK(std::abs(r.value - reference) <= std::max(r.abs_error, 1e-14));
}

TEST_CASE("error estimate tracks requested tolerance") {
    auto f = [](double x) { return 1.0 / (1e-3 + x * x); };
    const double exact = 2.0 / std::sqrt(1e-3) * std::atan(1.0 / std::sqrt(1e-3));
    for (double tol : {1e-4, 1e-7, 1e-10}) {
        const quad::Result r = quad::integrate(f, -1.0, 1.0, {.abs_tol = 1e-300, .rel_tol = tol});
        CHECK(r.converged);
        CHECK(std::abs(r.value - exact) / exact < 10.0 * tol);
    }
}

TEST_CASE("panel budget is respected") {
    const quad::Result r = quad::integrate([](double x) { return std::sin(1.0 / x); }, 1e-9, 1.0,
                                           {.abs_tol = 1e-300, .rel_tol = 1e-15, .max_panels = 10});
    CHECK_FALSE(r.converged);
    CHECK(r.evaluations == 15 + 30 * 9);
}
