#include "ilvr/path_metrics.hpp"

#include "ilvr/errors.hpp"

#include <cmath>
#include <string>

namespace ilvr {

std::string_view to_string(IncrementMode mode) {
    return mode == IncrementMode::exact ? "exact" : "approx";
}

IncrementMode increment_mode_from_string(std::string_view name) {
    if (name == "exact") return IncrementMode::exact;
    if (name == "approx") return IncrementMode::approx;
    throw ContractError("unknown increments mode '" + std::string(name) + "'");
}

PathMetrics compute_metrics(const PricePath& path, const Anchor& anchor, MetricsOptions options) {
    if (path.prices.empty() || path.increments.size() + 1 != path.prices.size()) {
        throw ContractError("compute_metrics: malformed price path");
    }
    if (path.prices.front() != anchor.p0()) {
        throw ContractError("compute_metrics: path starts at " + std::to_string(path.prices.front()) +
                            " but anchor price is " + std::to_string(anchor.p0()));
    }

    PathMetrics out;
    out.mode = options.mode;
    LvrAccumulator lvr(anchor.L(), options.mode);
    if (options.keep_series) {
        out.lvr_series.emplace();
        out.lvr_series->reserve(path.steps());
    }
    for (std::size_t i = 0; i < path.steps(); ++i) {
        const double cumulative = lvr.add(path.prices[i], path.increments[i]);
        if (options.keep_series) {
            out.lvr_series->push_back(cumulative);
        }
    }
    out.lvr_total = lvr.total();
    out.il_final = il(anchor, path.final_price());
    return out;
}

double lvr_rate(double p, double sigma0, double L) {
    if (!(p > 0.0)) {
        throw DomainError("lvr_rate: price must be positive, got " + std::to_string(p));
    }
    return 0.25 * L * sigma0 * sigma0 / (p * p * std::sqrt(p));
}

}  // namespace ilvr
