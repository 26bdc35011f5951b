#pragma once

#include "ilvr/cfmm.hpp"
#include "ilvr/path_metrics.hpp"
#include "ilvr/price_process.hpp"
#include "ilvr/stats.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ilvr {

struct EnsembleConfig {
    WalkParams walk;
    Anchor anchor{100.0, 100.0};
    std::size_t runs = 20000;
    std::uint64_t master_seed = 1;
    std::size_t histogram_bins = 100;
    IncrementMode mode = IncrementMode::exact;
    unsigned threads = 0;  // 0: std::thread::hardware_concurrency()

    void validate() const;
};

struct RunRecord {
    std::uint64_t seed = 0;
    double final_price = 0.0;
    double il_final = 0.0;
    double lvr_total = 0.0;
};

struct EnsembleResult {
    std::vector<RunRecord> runs;  // indexed by run index
    EnsembleReport il;
    EnsembleReport lvr;
    EnsembleReport final_price;
};

// One path, streamed: same numbers as generate_path + compute_metrics.
RunRecord run_single(const WalkParams& walk, const Anchor& anchor, IncrementMode mode,
                     std::uint64_t seed);

// Per-run seed derive_seed(master_seed, i). Output is independent of the
// thread count. A rejected path aborts with RunRejected for the lowest
// failing run index.
EnsembleResult run_ensemble(const EnsembleConfig& config);

// Same, with explicit per-run seeds (config.runs and master_seed ignored).
EnsembleResult run_ensemble_with_seeds(const EnsembleConfig& config,
                                       std::span<const std::uint64_t> seeds);

}  // namespace ilvr
