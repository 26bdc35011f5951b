#pragma once

// Constant-product pool (x*y = L^2) state and the closed-form loss
// expressions. Every value returned here is denominated in token-x units.

namespace ilvr {

struct PoolState {
    double L;  // liquidity constant, sqrt(x*y)
    double x;  // token-x reserve
    double y;  // token-y reserve
    double p;  // price of x in y units, y/x
};

// Starting condition of a position: price p0 and x-reserve x0.
class Anchor {
public:
    Anchor(double p0, double x0);

    // Anchor with the reserves a pool of liquidity L holds at price p.
    static Anchor from_liquidity(double p, double L);

    double p0() const noexcept { return p0_; }
    double x0() const noexcept { return x0_; }
    double y0() const noexcept { return x0_ * p0_; }
    double L() const noexcept { return L_; }

private:
    double p0_;
    double x0_;
    double L_;
};

// Reserves at price p: x = x0*sqrt(p0/p), y = x0*sqrt(p0*p).
PoolState pool_at_price(const Anchor& anchor, double p);

// Mark-to-market value x + y/p = 2L/sqrt(p), in x units.
double position_value(const PoolState& pool);

// Value of the untouched initial reserves at price p: x0 + y0/p.
double hodl_value(const Anchor& anchor, double p);

// Impermanent loss hodl - position = x0*(1 - sqrt(p0/p))^2.
double il(const Anchor& anchor, double p);

// Shadow-portfolio rebalancing pieces for a move p -> p+dp.
// x_released: x leaving the pool, (L/sqrt p)(1 - sqrt(p/(p+dp))).
// rebalance_cost: x spent buying the matching y at p+dp,
//   (L/sqrt p)(sqrt(p/(p+dp)) - p/(p+dp)).
struct RebalanceLegs {
    double x_released;
    double rebalance_cost;
};
RebalanceLegs rebalance_legs(double p, double dp, double L);

// LVR of a single move, (L/sqrt p)(1 - sqrt(p/(p+dp)))^2.
// Throws DomainError when p+dp <= 0.
double lvr_increment_exact(double p, double dp, double L);

// Second-order expansion (L/4) dp^2 / p^(5/2).
double lvr_increment_approx(double p, double dp, double L);

}  // namespace ilvr
