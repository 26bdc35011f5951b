#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration. The panel with the
// largest error estimate is bisected until the summed estimate meets
// max(abs_tol, rel_tol * |value|). Fully deterministic.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

namespace ilvr::quad {

struct Result {
    double value = 0.0;
    double abs_error = 0.0;  // estimated
    std::size_t evaluations = 0;
    bool converged = false;
};

struct Options {
    double abs_tol = 1e-12;
    double rel_tol = 1e-9;
    std::size_t max_panels = 4000;
};

namespace detail {

// Kronrod abscissae; odd indices are the embedded 7-point Gauss nodes.
inline constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

template <class F>
Panel gk15(const F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = half * kNodes[i];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
    }
    return Panel{a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

struct ByError {
    bool operator()(const Panel& l, const Panel& r) const { return l.error < r.error; }
};

}  // namespace detail

template <class F>
Result integrate(const F& f, double a, double b, const Options& opts = {}) {
    if (a == b) return Result{0.0, 0.0, 0, true};

    std::priority_queue<detail::Panel, std::vector<detail::Panel>, detail::ByError> panels;
    panels.push(detail::gk15(f, a, b));
    std::size_t evaluations = 15;
    double value = panels.top().value;
    double error = panels.top().error;

    auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(value)); };

    while (error > tolerance() && panels.size() < opts.max_panels) {
        const detail::Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            panels.push(worst);  // cannot split further
            break;
        }
        const detail::Panel left = detail::gk15(f, worst.a, mid);
        const detail::Panel right = detail::gk15(f, mid, worst.b);
        evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum from the panels to drop the running-update rounding.
    std::vector<detail::Panel> all;
    all.reserve(panels.size());
    while (!panels.empty()) {
        all.push_back(panels.top());
        panels.pop();
    }
    std::sort(all.begin(), all.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
    Result out;
    for (const auto& p : all) {
        out.value += p.value;
        out.abs_error += p.error;
    }
    out.evaluations = evaluations;
    out.converged = out.abs_error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(out.value));
    return out;
}

}  // namespace ilvr::quad
