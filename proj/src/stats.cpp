#include "ilvr/stats.hpp"

#include "ilvr/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ilvr {

std::uint64_t Histogram::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

Histogram make_histogram(std::span<const double> values, std::size_t bins, double lo, double hi) {
    if (bins == 0) {
        throw ContractError("histogram needs at least one bin");
    }
    if (!(hi >= lo)) {
        throw ContractError("histogram range is inverted");
    }
    if (hi == lo) {
        lo -= 0.5;
        hi += 0.5;
    }

    Histogram h;
    h.bin_edges.resize(bins + 1);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (std::size_t i = 0; i <= bins; ++i) {
        h.bin_edges[i] = lo + width * static_cast<double>(i);
    }
    h.bin_edges.back() = hi;
    h.counts.assign(bins, 0);

    for (double v : values) {
        if (v < lo || v > hi) continue;
        auto idx = static_cast<std::size_t>((v - lo) / width);
        idx = std::min(idx, bins - 1);
        // Guard against rounding of the division near an edge.
        while (idx > 0 && v < h.bin_edges[idx]) --idx;
        while (idx + 1 < bins && v >= h.bin_edges[idx + 1]) ++idx;
        ++h.counts[idx];
    }
    return h;
}

EnsembleReport summarize(std::span<const double> values, std::size_t bins, std::string metric) {
    if (values.size() < 2) {
        throw ContractError("summarize needs at least two samples, got " +
                            std::to_string(values.size()));
    }
    if (bins == 0) {
        throw ContractError("summarize needs at least one histogram bin");
    }

    const auto n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / n;

    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double std_dev = std::sqrt(ss / (n - 1.0));

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    const double median =
        sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);

    EnsembleReport r;
    r.metric = std::move(metric);
    r.mean = mean;
    r.std_dev = std_dev;
    r.std_err = std_dev / std::sqrt(n);
    r.median = median;
    r.histogram = make_histogram(values, bins, sorted.front(), sorted.back());
    r.runs = values.size();
    return r;
}

}  // namespace ilvr
