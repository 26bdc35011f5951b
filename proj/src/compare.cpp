#include "ilvr/compare.hpp"

#include "ilvr/errors.hpp"
#include "ilvr/io.hpp"

namespace ilvr {

namespace {

double z_score(double observed, double expected, double se) {
    return se > 0.0 ? (observed - expected) / se : 0.0;
}

}  // namespace

AnalyticParams analytic_params_for(const EnsembleConfig& config) {
    AnalyticParams params;
    params.p0 = config.anchor.p0();
    params.x0 = config.anchor.x0();
    params.sigma0 = config.walk.sigma0;
    return params;
}

CompareSummary compare_from(const EnsembleResult& ensemble, const EnsembleConfig& config,
                            const AnalyticParams& params) {
    const auto t = static_cast<double>(config.walk.steps);
    if (config.walk.steps == 0) {
        throw ContractError("compare needs at least one step");
    }
    CompareSummary s;
    s.mc_mean_il = ensemble.il.mean;
    s.mc_mean_lvr = ensemble.lvr.mean;
    s.mc_se_il = ensemble.il.std_err;
    s.mc_se_lvr = ensemble.lvr.std_err;
    s.analytic_il = expected_il(params, t);
    s.analytic_lvr = expected_lvr(params, t);
    s.linear_approx = linear_approx(params, t);
    s.z_il = z_score(s.mc_mean_il, s.analytic_il, s.mc_se_il);
    s.z_lvr = z_score(s.mc_mean_lvr, s.analytic_lvr, s.mc_se_lvr);
    s.runs = ensemble.runs.size();
    s.steps = config.walk.steps;
    return s;
}

CompareSummary run_compare(const EnsembleConfig& config, const AnalyticParams& params) {
    // Fail on the regime before spending time on the ensemble.
    if (config.walk.steps > 0) {
        (void)integrate_expected_il(params, static_cast<double>(config.walk.steps));
    }
    const EnsembleResult ensemble = run_ensemble(config);
    return compare_from(ensemble, config, params);
}

std::string compare_json(const CompareSummary& s) {
    using io::format_number;
    std::string out = "{\n";
    auto field = [&out](const char* name, const std::string& value, bool last = false) {
        out += "  \"";
        out += name;
        out += "\": ";
        out += value;
        out += last ? "\n" : ",\n";
    };
    field("runs", std::to_string(s.runs));
    field("steps", std::to_string(s.steps));
    field("mc_mean_il", format_number(s.mc_mean_il));
    field("mc_mean_lvr", format_number(s.mc_mean_lvr));
    field("mc_se_il", format_number(s.mc_se_il));
    field("mc_se_lvr", format_number(s.mc_se_lvr));
    field("analytic_il", format_number(s.analytic_il));
    field("analytic_lvr", format_number(s.analytic_lvr));
    field("linear_approx", format_number(s.linear_approx));
    field("z_il", format_number(s.z_il));
    field("z_lvr", format_number(s.z_lvr), true);
    out += "}\n";
    return out;
}

}  // namespace ilvr
