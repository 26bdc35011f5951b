#pragma once

#include "ilvr/rng.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace ilvr {

enum class StepKind { binary, gaussian };

std::string_view to_string(StepKind kind);
StepKind step_kind_from_string(std::string_view name);

// Discrete walk p_{i+1} = p_i + sigma0 * xi. For the binary kind xi = +-1 with
// equal probability; the gaussian kind draws xi ~ N(0,1).
struct WalkParams {
    double p0 = 100.0;
    double sigma0 = 0.01;  // per-step amplitude (std-dev), price units
    std::size_t steps = 5000;
    StepKind kind = StepKind::binary;

    // Throws ContractError on non-positive p0/sigma0.
    void validate() const;

    // sigma0*sqrt(steps) < p0: the walk's typical excursion stays clear of zero.
    bool within_brownian_domain() const;
};

// A realized trajectory. increments[i] is the exact dp applied at step i,
// so prices[i+1] == prices[i] + increments[i] bit for bit.
struct PricePath {
    std::vector<double> prices;
    std::vector<double> increments;
    std::uint64_t seed = 0;

    // Path from a bare price list; increments are the floating-point differences.
    static PricePath from_prices(std::vector<double> prices, std::uint64_t seed = 0);

    std::size_t steps() const noexcept { return increments.size(); }
    double final_price() const { return prices.back(); }
};

// Streams one path step by step without storing it. generate_path is built on
// top of this, so a walker and a stored path for the same seed agree exactly.
class PathWalker {
public:
    PathWalker(const WalkParams& params, std::uint64_t seed);

    // Draws the next increment. Does not check positivity.
    double next_increment() {
        if (kind_ == StepKind::binary) {
            if (bits_left_ == 0) {
                bits_ = engine_();
                bits_left_ = 64;
            }
            const bool up = (bits_ & 1U) != 0;
            bits_ >>= 1;
            --bits_left_;
            return up ? sigma0_ : -sigma0_;
        }
        return sigma0_ * normal_(engine_);
    }

private:
    PathEngine engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uint64_t bits_ = 0;
    unsigned bits_left_ = 0;
    double sigma0_;
    StepKind kind_;
};

// Throws PathRejected carrying the step index if any price reaches <= 0.
PricePath generate_path(const WalkParams& params, std::uint64_t seed);

// Gaussian transition density of the driftless walk after t steps.
double bm_density(double p, double t, double p0, double sigma0);

// Zero-drift lognormal density with volatility sigma0/p0 per step, so that the
// instantaneous price std-dev at p0 matches the Brownian walk. Mean is p0.
double gbm_density(double p, double t, double p0, double sigma0);

}  // namespace ilvr
