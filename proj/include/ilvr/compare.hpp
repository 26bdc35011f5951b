#pragma once

#include "ilvr/analytic.hpp"
#include "ilvr/ensemble.hpp"

#include <string>

namespace ilvr {

// Monte Carlo means against the quadrature values at matched parameters.
struct CompareSummary {
    double mc_mean_il = 0.0;
    double mc_mean_lvr = 0.0;
    double mc_se_il = 0.0;
    double mc_se_lvr = 0.0;
    double analytic_il = 0.0;
    double analytic_lvr = 0.0;
    double linear_approx = 0.0;
    double z_il = 0.0;   // (mc_mean_il - analytic_il) / mc_se_il
    double z_lvr = 0.0;  // (mc_mean_lvr - analytic_lvr) / mc_se_lvr
    std::size_t runs = 0;
    std::size_t steps = 0;
};

// Analytic parameters matching an ensemble configuration.
AnalyticParams analytic_params_for(const EnsembleConfig& config);

CompareSummary run_compare(const EnsembleConfig& config, const AnalyticParams& params);
CompareSummary compare_from(const EnsembleResult& ensemble, const EnsembleConfig& config,
                            const AnalyticParams& params);

std::string compare_json(const CompareSummary& summary);

}  // namespace ilvr
