#include "ilvr/cfmm.hpp"
#include "ilvr/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ilvr;

namespace {

double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

TEST_CASE("pool_at_price") {
    const Anchor anchor(100.0, 100.0);
    CHECK(anchor.L() == doctest::Approx(1000.0));

    const PoolState at_start = pool_at_price(anchor, 100.0);
    CHECK(at_start.x == doctest::Approx(100.0));
    CHECK(at_start.y == doctest::Approx(10000.0));
    CHECK(at_start.L == doctest::Approx(1000.0));

    const PoolState up = pool_at_price(anchor, 400.0);
    CHECK(up.x == doctest::Approx(50.0));
    CHECK(up.y == doctest::Approx(20000.0));

    const PoolState mid = pool_at_price(anchor, 121.0);
    CHECK(mid.x == doctest::Approx(100.0 / 1.1));
    // Independent check of the curve: the reserve product stays L^2 = 1e6.
    CHECK(rel_diff(mid.x * mid.y, 1e6) < 1e-12);
    CHECK(rel_diff(mid.y / mid.x, 121.0) < 1e-12);

    CHECK_THROWS_AS(pool_at_price(anchor, 0.0), DomainError);
    CHECK_THROWS_AS(pool_at_price(anchor, -1.0), DomainError);
}

TEST_CASE("constant product and price relations hold over many prices") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> log_price(std::log(1e-3), std::log(1e6));
    std::uniform_real_distribution<double> log_x(std::log(1e-2), std::log(1e4));
    for (int i = 0; i < 20000; ++i) {
        const Anchor anchor(std::exp(log_price(rng)), std::exp(log_x(rng)));
        const double p = std::exp(log_price(rng));
        const PoolState s = pool_at_price(anchor, p);
        REQUIRE(rel_diff(s.x * s.y / (s.L * s.L), 1.0) < 1e-12);
        REQUIRE(rel_diff(s.y / s.x, p) < 1e-12);
        REQUIRE(rel_diff(s.x, s.L / std::sqrt(p)) < 1e-12);
        REQUIRE(rel_diff(s.y, s.L * std::sqrt(p)) < 1e-12);
    }
}

TEST_CASE("position and hodl values") {
    const Anchor anchor(100.0, 100.0);
    CHECK(position_value(pool_at_price(anchor, 100.0)) == doctest::Approx(200.0));
    CHECK(position_value(pool_at_price(anchor, 400.0)) == doctest::Approx(100.0));

    for (double L : {0.5, 3.0, 1000.0}) {
        const Anchor a = Anchor::from_liquidity(7.0, L);
        CHECK(position_value(pool_at_price(a, 28.0)) ==
              doctest::Approx(0.5 * position_value(pool_at_price(a, 7.0))));
    }

    CHECK(hodl_value(anchor, 100.0) == doctest::Approx(200.0));
    CHECK(hodl_value(anchor, 100.0) == doctest::Approx(position_value(pool_at_price(anchor, 100.0))));
    CHECK(hodl_value(anchor, 200.0) == doctest::Approx(150.0));
    CHECK(hodl_value(anchor, 1e300) == doctest::Approx(100.0));
    CHECK_THROWS_AS(hodl_value(anchor, 0.0), DomainError);
}

TEST_CASE("impermanent loss") {
    const Anchor anchor(100.0, 100.0);
    CHECK(il(anchor, 100.0) == 0.0);

    // Cross-check against hodl - position evaluated independently.
    const double up = 150.0 - 2.0 * 1000.0 / std::sqrt(200.0);
    CHECK(il(anchor, 200.0) == doctest::Approx(up).epsilon(1e-12));
    CHECK(il(anchor, 200.0) == doctest::Approx(8.578643762690495).epsilon(1e-12));

    const double down = (100.0 + 10000.0 / 50.0) - 2.0 * 1000.0 / std::sqrt(50.0);
    CHECK(il(anchor, 50.0) == doctest::Approx(down).epsilon(1e-12));
    CHECK(il(anchor, 50.0) == doctest::Approx(17.157287525380990).epsilon(1e-12));

    CHECK_THROWS_AS(il(anchor, -5.0), DomainError);
}

TEST_CASE("exact LVR increment") {
    CHECK(lvr_increment_exact(100.0, 0.0, 1000.0) == 0.0);

    const double v = lvr_increment_exact(100.0, 1.0, 1000.0);
    const RebalanceLegs legs = rebalance_legs(100.0, 1.0, 1000.0);
    // Independent route: x released by the pool minus the cost of the y bought.
    const double scale = 1000.0 / std::sqrt(100.0);
    const double dx = scale * (1.0 - std::sqrt(100.0 / 101.0));
    const double dxbar = scale * (std::sqrt(100.0 / 101.0) - 100.0 / 101.0);
    CHECK(v == doctest::Approx(dx - dxbar).epsilon(1e-9));
    CHECK(v == doctest::Approx(2.46294810118276794e-3).epsilon(1e-12));
    CHECK(legs.x_released - legs.rebalance_cost == doctest::Approx(v).epsilon(1e-9));

    // A single jump from 100 to 200 is the same loss as IL over that move.
    CHECK(lvr_increment_exact(100.0, 100.0, 1000.0) ==
          doctest::Approx(il(Anchor(100.0, 100.0), 200.0)).epsilon(1e-14));

    CHECK(lvr_increment_exact(100.0, -50.0, 1000.0) > 0.0);
    CHECK_THROWS_AS(lvr_increment_exact(100.0, -100.0, 1000.0), DomainError);
    CHECK_THROWS_AS(lvr_increment_exact(100.0, -150.0, 1000.0), DomainError);
    CHECK_THROWS_AS(lvr_increment_exact(0.0, 1.0, 1000.0), DomainError);
}

TEST_CASE("approximate LVR increment") {
    CHECK(lvr_increment_approx(100.0, 0.01, 1000.0) == doctest::Approx(2.5e-7).epsilon(1e-12));
    CHECK(lvr_increment_approx(100.0, 1.0, 1000.0) == doctest::Approx(2.5e-3).epsilon(1e-12));
    const double exact = lvr_increment_exact(100.0, 1.0, 1000.0);
    CHECK(std::abs(lvr_increment_approx(100.0, 1.0, 1000.0) - exact) / exact < 0.02);
    CHECK_THROWS_AS(lvr_increment_approx(-1.0, 1.0, 1000.0), DomainError);

    // Upward moves: the expansion overshoots the exact form.
    for (int i = 1; i <= 1000; ++i) {
        const double dp = 100.0 * i / 1000.0;
        REQUIRE(lvr_increment_approx(100.0, dp, 1000.0) >= lvr_increment_exact(100.0, dp, 1000.0));
    }
}

TEST_CASE("IL equals the exact LVR increment of the same move") {
    std::mt19937_64 rng(20240101);
    std::uniform_real_distribution<double> log_p(std::log(1e-3), std::log(1e6));
    std::uniform_real_distribution<double> ratio(-0.99, 10.0);
    std::uniform_real_distribution<double> log_L(std::log(1e-3), std::log(1e6));
    for (int i = 0; i < 100000; ++i) {
        const double p = std::exp(log_p(rng));
        const double dp = ratio(rng) * p;
        const double L = std::exp(log_L(rng));
        const double a = il(Anchor::from_liquidity(p, L), p + dp);
        const double b = lvr_increment_exact(p, dp, L);
        REQUIRE(rel_diff(a, b) < 1e-12);
        REQUIRE(a >= 0.0);
        REQUIRE(b >= 0.0);
        if (dp != 0.0) {
            const RebalanceLegs legs = rebalance_legs(p, dp, L);
            REQUIRE(legs.x_released > legs.rebalance_cost);
        }
    }
}

TEST_CASE("second-order contact between exact and expanded increments") {
    for (double frac : {1e-1, 5e-2, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
        for (double sign : {1.0, -1.0}) {
            const double p = 37.0;
            const double dp = sign * frac * p * 0.999;
            const double exact = lvr_increment_exact(p, dp, 5.0);
            const double approx = lvr_increment_approx(p, dp, 5.0);
            CAPTURE(dp);
            CHECK(std::abs(exact - approx) / exact < 10.0 * std::abs(dp / p));
        }
    }
}
