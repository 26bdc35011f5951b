#pragma once

#include "ilvr/cfmm.hpp"
#include "ilvr/price_process.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace ilvr {

enum class IncrementMode { exact, approx };

std::string_view to_string(IncrementMode mode);
IncrementMode increment_mode_from_string(std::string_view name);

// Endpoint IL and path-summed LVR of one trajectory, in x units.
struct PathMetrics {
    double il_final = 0.0;
    double lvr_total = 0.0;
    std::optional<std::vector<double>> lvr_series;  // cumulative LVR after each step
    IncrementMode mode = IncrementMode::exact;
};

// Running LVR sum over a stream of (p, dp) steps. compute_metrics and the
// ensemble both go through this so their totals agree exactly.
class LvrAccumulator {
public:
    LvrAccumulator(double L, IncrementMode mode) : L_(L), mode_(mode) {}

    double add(double p, double dp) {
        total_ += mode_ == IncrementMode::exact ? lvr_increment_exact(p, dp, L_)
                                                : lvr_increment_approx(p, dp, L_);
        return total_;
    }

    double total() const noexcept { return total_; }

private:
    double L_;
    IncrementMode mode_;
    double total_ = 0.0;
};

struct MetricsOptions {
    IncrementMode mode = IncrementMode::exact;
    bool keep_series = false;
};

// Requires path.prices[0] == anchor.p0(); throws ContractError otherwise.
PathMetrics compute_metrics(const PricePath& path, const Anchor& anchor,
                            MetricsOptions options = {});

// dLVR/dt = L sigma0^2 / (4 p^(5/2)), per step. Identical to
// lvr_increment_approx(p, sigma0, L) since dp^2 = sigma0^2 dt.
double lvr_rate(double p, double sigma0, double L);

}  // namespace ilvr
