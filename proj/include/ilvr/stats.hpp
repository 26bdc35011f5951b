#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ilvr {

struct Histogram {
    std::vector<double> bin_edges;      // bins + 1, strictly increasing
    std::vector<std::uint64_t> counts;  // bins

    std::size_t bins() const noexcept { return counts.size(); }
    std::uint64_t total() const noexcept;
};

// Equal-width bins over [lo, hi]; the last bin is closed on the right.
// Values outside the range are ignored. A degenerate range (lo == hi) is
// widened to [lo - 0.5, lo + 0.5].
Histogram make_histogram(std::span<const double> values, std::size_t bins, double lo, double hi);

struct EnsembleReport {
    std::string metric;  // "il", "lvr" or "final_price"
    double mean = 0.0;
    double std_dev = 0.0;  // n-1 denominator
    double std_err = 0.0;  // std_dev / sqrt(n)
    double median = 0.0;   // midpoint of the two central order statistics for even n
    Histogram histogram;
    std::uint64_t runs = 0;
};

// Mean, unbiased spread, median and a [min, max] histogram. Needs at least
// two samples and one bin. Summation runs in input order.
EnsembleReport summarize(std::span<const double> values, std::size_t bins,
                         std::string metric = {});

}  // namespace ilvr
