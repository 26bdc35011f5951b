#include "ilvr/analytic.hpp"

#include "ilvr/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ilvr {

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

// Width of the Gaussian in price units at time t.
double spread(const AnalyticParams& params, double t) {
    return std::sqrt(2.0 * params.sigma0 * params.sigma0 * t);
}

void check_time(const AnalyticParams& params, double t, const char* what) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError(std::string(what) + ": t must be positive, got " + std::to_string(t));
    }
    const double cutoff = -params.p0 / spread(params, t);
    if (cutoff > -params.gauss_window) {
        throw RegimeError(t);
    }
}

quad::Options scaled_options(const AnalyticParams& params, double prefactor) {
    return quad::Options{
        .abs_tol = params.abs_tol / prefactor,
        .rel_tol = params.rel_tol,
    };
}

quad::Result scale(quad::Result r, double factor) {
    r.value *= factor;
    r.abs_error *= factor;
    return r;
}

}  // namespace

void AnalyticParams::validate() const {
    if (!(p0 > 0.0) || !(x0 > 0.0) || !(sigma0 > 0.0)) {
        throw ContractError("analytic: p0, x0 and sigma0 must be positive");
    }
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw ContractError("analytic: tolerances must be positive");
    }
    if (!(gauss_window >= 6.0)) {
        throw ContractError("analytic: gauss_window must be at least 6, got " +
                            std::to_string(gauss_window));
    }
}

std::string_view to_string(CurveKind kind) {
    switch (kind) {
        case CurveKind::il: return "il";
        case CurveKind::lvr: return "lvr";
        case CurveKind::linear_approx: return "linear";
    }
    return "il";
}

CurveKind curve_kind_from_string(std::string_view name) {
    if (name == "il") return CurveKind::il;
    if (name == "lvr") return CurveKind::lvr;
    if (name == "linear" || name == "linear_approx") return CurveKind::linear_approx;
    throw ContractError("unknown curve kind '" + std::string(name) + "'");
}

double max_valid_time(const AnalyticParams& params) {
    const double w = params.gauss_window;
    return params.p0 * params.p0 / (2.0 * params.sigma0 * params.sigma0 * w * w);
}

quad::Result integrate_expected_il(const AnalyticParams& params, double t) {
    params.validate();
    check_time(params, t, "expected_il");

    const double p0 = params.p0;
    const double s = spread(params, t);
    const double cutoff = -p0 / s;
    const double delta = 1e-12 * p0;
    const double lower = std::max(-params.gauss_window, cutoff + delta / s);

    // 1 - sqrt(p0/p) written as (1 - p0/p) / (1 + sqrt(p0/p)) to avoid
    // cancellation when s*u << p0.
    auto integrand = [p0, s](double u) {
        const double moved = s * u;
        const double p = p0 + moved;
        const double root = std::sqrt(p0 / p);
        const double gap = (moved / p) / (1.0 + root);
        return gap * gap * std::exp(-u * u);
    };

    const double prefactor = params.x0 / kSqrtPi;
    return scale(quad::integrate(integrand, lower, params.gauss_window,
                                 scaled_options(params, prefactor)),
                 prefactor);
}

double expected_il(const AnalyticParams& params, double t) {
    return integrate_expected_il(params, t).value;
}

quad::Result integrate_expected_lvr(const AnalyticParams& params, double t) {
    params.validate();
    check_time(params, t, "expected_lvr");

    const double p0 = params.p0;
    const double w = params.gauss_window;
    const double two_var_rate = 2.0 * params.sigma0 * params.sigma0;

    // Inner integrals are solved an order of magnitude tighter than the outer.
    const quad::Options inner_opts{.abs_tol = 1e-300, .rel_tol = 0.1 * params.rel_tol};

    auto inner = [&](double t_prime) {
        const double s = std::sqrt(two_var_rate * t_prime);
        auto density_weighted = [p0, s](double u) {
            const double p = p0 + s * u;
            return std::exp(-u * u) / (p * p * std::sqrt(p));
        };
        return quad::integrate(density_weighted, -w, w, inner_opts).value;
    };
    // t' = v^2, dt' = 2 v dv
    auto outer = [&](double v) { return 2.0 * v * inner(v * v); };

    const double prefactor =
        params.x0 * params.sigma0 * params.sigma0 * std::sqrt(p0) / (4.0 * kSqrtPi);
    return scale(quad::integrate(outer, 0.0, std::sqrt(t), scaled_options(params, prefactor)),
                 prefactor);
}

double expected_lvr(const AnalyticParams& params, double t) {
    return integrate_expected_lvr(params, t).value;
}

double linear_approx(const AnalyticParams& params, double t) {
    if (t < 0.0) {
        throw DomainError("linear_approx: t must be non-negative, got " + std::to_string(t));
    }
    return params.x0 * params.sigma0 * params.sigma0 * t / (4.0 * params.p0 * params.p0);
}

AnalyticCurve curve(const AnalyticParams& params, CurveKind kind, double t_max, std::size_t points) {
    if (points < 2) {
        throw ContractError("curve needs at least 2 points");
    }
    if (!(t_max > 0.0)) {
        throw DomainError("curve: t_max must be positive, got " + std::to_string(t_max));
    }
    AnalyticCurve out;
    out.kind = kind;
    out.times.resize(points);
    out.values.resize(points);
    const auto last = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = i + 1 == points ? t_max : t_max * static_cast<double>(i) / last;
        out.times[i] = t;
        if (t == 0.0) {
            out.values[i] = 0.0;
            continue;
        }
        switch (kind) {
            case CurveKind::il: out.values[i] = expected_il(params, t); break;
            case CurveKind::lvr: out.values[i] = expected_lvr(params, t); break;
            case CurveKind::linear_approx: out.values[i] = linear_approx(params, t); break;
        }
    }
    return out;
}

}  // namespace ilvr
