#include "ilvr/cfmm.hpp"

#include "ilvr/errors.hpp"

#include <cmath>
#include <string>

namespace ilvr {

namespace {

void require_positive_price(double p, const char* what) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw DomainError(std::string(what) + ": price must be positive and finite, got " +
                          std::to_string(p));
    }
}

}  // namespace

Anchor::Anchor(double p0, double x0) : p0_(p0), x0_(x0), L_(x0 * std::sqrt(p0)) {
    require_positive_price(p0, "Anchor");
    if (!(x0 > 0.0) || !std::isfinite(x0)) {
        throw DomainError("Anchor: x0 must be positive and finite, got " + std::to_string(x0));
    }
}

Anchor Anchor::from_liquidity(double p, double L) {
    require_positive_price(p, "Anchor::from_liquidity");
    return Anchor(p, L / std::sqrt(p));
}

PoolState pool_at_price(const Anchor& anchor, double p) {
    require_positive_price(p, "pool_at_price");
    return PoolState{
        .L = anchor.L(),
        .x = anchor.x0() * std::sqrt(anchor.p0() / p),
        .y = anchor.x0() * std::sqrt(anchor.p0() * p),
        .p = p,
    };
}

double position_value(const PoolState& pool) {
    return 2.0 * pool.L / std::sqrt(pool.p);
}

double hodl_value(const Anchor& anchor, double p) {
    require_positive_price(p, "hodl_value");
    return anchor.x0() + anchor.y0() / p;
}

double il(const Anchor& anchor, double p) {
    require_positive_price(p, "il");
    const double gap = 1.0 - std::sqrt(anchor.p0() / p);
    return anchor.x0() * gap * gap;
}

RebalanceLegs rebalance_legs(double p, double dp, double L) {
    require_positive_price(p, "rebalance_legs");
    require_positive_price(p + dp, "rebalance_legs (p+dp)");
    const double ratio = p / (p + dp);
    const double root = std::sqrt(ratio);
    const double scale = L / std::sqrt(p);
    return RebalanceLegs{
        .x_released = scale * (1.0 - root),
        .rebalance_cost = scale * (root - ratio),
    };
}

double lvr_increment_exact(double p, double dp, double L) {
    require_positive_price(p, "lvr_increment_exact");
    require_positive_price(p + dp, "lvr_increment_exact (p+dp)");
    const double gap = 1.0 - std::sqrt(p / (p + dp));
    return L / std::sqrt(p) * gap * gap;
}

double lvr_increment_approx(double p, double dp, double L) {
    require_positive_price(p, "lvr_increment_approx");
    return 0.25 * L * dp * dp / (p * p * std::sqrt(p));
}

}  // namespace ilvr
