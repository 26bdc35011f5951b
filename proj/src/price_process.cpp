#include "ilvr/price_process.hpp"

#include "ilvr/errors.hpp"

#include <numbers>
#include <string>

namespace ilvr {

std::string_view to_string(StepKind kind) {
    return kind == StepKind::binary ? "binary" : "gaussian";
}

StepKind step_kind_from_string(std::string_view name) {
    if (name == "binary") return StepKind::binary;
    if (name == "gaussian") return StepKind::gaussian;
    throw ContractError("unknown step kind '" + std::string(name) + "'");
}

void WalkParams::validate() const {
    if (!(p0 > 0.0) || !std::isfinite(p0)) {
        throw ContractError("walk: p0 must be positive, got " + std::to_string(p0));
    }
    if (!(sigma0 > 0.0) || !std::isfinite(sigma0)) {
        throw ContractError("walk: sigma0 must be positive, got " + std::to_string(sigma0));
    }
}

bool WalkParams::within_brownian_domain() const {
    return sigma0 * std::sqrt(static_cast<double>(steps)) < p0;
}

PricePath PricePath::from_prices(std::vector<double> prices, std::uint64_t seed) {
    if (prices.empty()) {
        throw ContractError("price path needs at least one price");
    }
    PricePath path;
    path.increments.reserve(prices.size() - 1);
    for (std::size_t i = 0; i < prices.size(); ++i) {
        if (!(prices[i] > 0.0)) {
            throw PathRejected(i, prices[i]);
        }
        if (i > 0) {
            path.increments.push_back(prices[i] - prices[i - 1]);
        }
    }
    path.prices = std::move(prices);
    path.seed = seed;
    return path;
}

PathWalker::PathWalker(const WalkParams& params, std::uint64_t seed)
    : engine_(seed), sigma0_(params.sigma0), kind_(params.kind) {}

PricePath generate_path(const WalkParams& params, std::uint64_t seed) {
    params.validate();
    PricePath path;
    path.seed = seed;
    path.prices.reserve(params.steps + 1);
    path.increments.reserve(params.steps);
    path.prices.push_back(params.p0);

    PathWalker walker(params, seed);
    double p = params.p0;
    for (std::size_t i = 0; i < params.steps; ++i) {
        const double dp = walker.next_increment();
        p += dp;
        if (!(p > 0.0)) {
            throw PathRejected(i + 1, p);
        }
        path.increments.push_back(dp);
        path.prices.push_back(p);
    }
    return path;
}

double bm_density(double p, double t, double p0, double sigma0) {
    if (!(t > 0.0)) {
        throw DomainError("bm_density: t must be positive, got " + std::to_string(t));
    }
    const double var = sigma0 * sigma0 * t;
    const double d = p - p0;
    return std::exp(-d * d / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
}

double gbm_density(double p, double t, double p0, double sigma0) {
    if (!(t > 0.0)) {
        throw DomainError("gbm_density: t must be positive, got " + std::to_string(t));
    }
    if (!(p > 0.0)) {
        throw DomainError("gbm_density: p must be positive, got " + std::to_string(p));
    }
    const double vol = sigma0 / p0;
    const double s2 = vol * vol * t;
    const double mu = std::log(p0) - 0.5 * s2;
    const double z = std::log(p) - mu;
    return std::exp(-z * z / (2.0 * s2)) / (p * std::sqrt(2.0 * std::numbers::pi * s2));
}

}  // namespace ilvr
