#include "ilvr/ensemble.hpp"

#include "ilvr/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <optional>
#include <thread>

namespace ilvr {

namespace {

constexpr std::size_t kChunk = 64;

struct Failure {
    std::size_t run_index;
    std::exception_ptr error;
};

}  // namespace

void EnsembleConfig::validate() const {
    walk.validate();
    if (runs < 2) {
        throw ContractError("ensemble needs at least 2 runs, got " + std::to_string(runs));
    }
    if (histogram_bins == 0) {
        throw ContractError("ensemble needs at least one histogram bin");
    }
    if (walk.p0 != anchor.p0()) {
        throw ContractError("ensemble: walk p0 and anchor p0 differ");
    }
}

RunRecord run_single(const WalkParams& walk, const Anchor& anchor, IncrementMode mode,
                     std::uint64_t seed) {
    PathWalker walker(walk, seed);
    LvrAccumulator lvr(anchor.L(), mode);
    double p = walk.p0;
    for (std::size_t i = 0; i < walk.steps; ++i) {
        const double dp = walker.next_increment();
        const double next = p + dp;
        if (!(next > 0.0)) {
            throw PathRejected(i + 1, next);
        }
        lvr.add(p, dp);
        p = next;
    }
    return RunRecord{
        .seed = seed,
        .final_price = p,
        .il_final = il(anchor, p),
        .lvr_total = lvr.total(),
    };
}

EnsembleResult run_ensemble_with_seeds(const EnsembleConfig& config,
                                       std::span<const std::uint64_t> seeds) {
    EnsembleConfig checked = config;
    checked.runs = seeds.size();
    checked.validate();

    const std::size_t n = seeds.size();
    EnsembleResult result;
    result.runs.resize(n);

    unsigned workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
    workers = std::max(1U, workers);
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, (n + kChunk - 1) / kChunk));

    std::atomic<std::size_t> next{0};
    std::vector<std::optional<Failure>> failures(workers);

    auto work = [&](unsigned worker) {
        for (;;) {
            const std::size_t begin = next.fetch_add(kChunk, std::memory_order_relaxed);
            if (begin >= n) return;
            const std::size_t end = std::min(n, begin + kChunk);
            for (std::size_t i = begin; i < end; ++i) {
                try {
                    result.runs[i] = run_single(config.walk, config.anchor, config.mode, seeds[i]);
                } catch (...) {
                    // Keep the lowest failing index seen by this worker and stop.
                    if (!failures[worker] || i < failures[worker]->run_index) {
                        failures[worker] = Failure{i, std::current_exception()};
                    }
                    return;
                }
            }
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }

    const Failure* first = nullptr;
    for (const auto& f : failures) {
        if (f && (first == nullptr || f->run_index < first->run_index)) first = &*f;
    }
    if (first != nullptr) {
        try {
            std::rethrow_exception(first->error);
        } catch (const PathRejected& e) {
            throw RunRejected(first->run_index, e);
        }
    }

    std::vector<double> il(n), lvr(n), final_price(n);
    for (std::size_t i = 0; i < n; ++i) {
        il[i] = result.runs[i].il_final;
        lvr[i] = result.runs[i].lvr_total;
        final_price[i] = result.runs[i].final_price;
    }
    result.il = summarize(il, config.histogram_bins, "il");
    result.lvr = summarize(lvr, config.histogram_bins, "lvr");
    result.final_price = summarize(final_price, config.histogram_bins, "final_price");
    return result;
}

EnsembleResult run_ensemble(const EnsembleConfig& config) {
    config.validate();
    std::vector<std::uint64_t> seeds(config.runs);
    for (std::size_t i = 0; i < config.runs; ++i) {
        seeds[i] = derive_seed(config.master_seed, i);
    }
    return run_ensemble_with_seeds(config, seeds);
}

}  // namespace ilvr
