#pragma once

// Path averages of IL and LVR under the Brownian (Gaussian) price law,
// evaluated by quadrature in the substituted variable u = (p - p0)/sqrt(2 sigma0^2 t).

#include "ilvr/quadrature.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace ilvr {

struct AnalyticParams {
    double p0 = 100.0;
    double x0 = 100.0;
    double sigma0 = 0.01;
    double abs_tol = 1e-12;
    double rel_tol = 1e-9;
    // Half-width W of the u window. The integrals are taken over [-W, W];
    // once the zero-price cutoff -p0/sqrt(2 sigma0^2 t) enters it the
    // Brownian law puts visible mass at p <= 0 and evaluation is refused.
    double gauss_window = 8.0;

    void validate() const;
};

enum class CurveKind { il, lvr, linear_approx };

std::string_view to_string(CurveKind kind);
CurveKind curve_kind_from_string(std::string_view name);  // "il" | "lvr" | "linear"

struct AnalyticCurve {
    std::vector<double> times;
    std::vector<double> values;
    CurveKind kind = CurveKind::il;
};

// Largest t for which the cutoff stays outside the window: p0^2 / (2 sigma0^2 W^2).
double max_valid_time(const AnalyticParams& params);

// <IL(t)> = (x0/sqrt(pi)) * int (1 - sqrt(p0/(p0 + s u)))^2 exp(-u^2) du, s = sqrt(2 sigma0^2 t).
// Throws DomainError for t <= 0 and RegimeError outside the valid regime.
quad::Result integrate_expected_il(const AnalyticParams& params, double t);
double expected_il(const AnalyticParams& params, double t);

// <LVR(t)> = (x0 sigma0^2 sqrt(p0) / (4 sqrt(pi))) *
//            int_0^t dt' int (p0 + s(t') u)^(-5/2) exp(-u^2) du.
// The outer integral runs in v = sqrt(t'). Same errors as expected_il.
quad::Result integrate_expected_lvr(const AnalyticParams& params, double t);
double expected_lvr(const AnalyticParams& params, double t);

// Leading-order law x0 sigma0^2 t / (4 p0^2).
double linear_approx(const AnalyticParams& params, double t);

// Uniform grid on [0, t_max] with both ends. At t = 0 the il/lvr values are
// the t -> 0+ limit, 0.
AnalyticCurve curve(const AnalyticParams& params, CurveKind kind, double t_max, std::size_t points);

}  // namespace ilvr
