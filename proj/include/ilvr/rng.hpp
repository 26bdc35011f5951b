#pragma once

#include <cstdint>
#include <random>

namespace ilvr {

// Engine used for every price path. Seeded once per path.
using PathEngine = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Per-run seed. Depends only on (master_seed, run_index), so an ensemble is
// reproducible irrespective of which worker runs which index.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run_index) noexcept {
    return mix64(mix64(master_seed) ^ mix64(run_index + 0x632be59bd9b4e019ULL));
}

}  // namespace ilvr
