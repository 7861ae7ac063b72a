// Copyright (c) 2026 The Coinclerk developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <cstdint>

namespace coinclerk {

// SplitMix64 (Steele/Lea/Vigna). Chosen because the whole generator is a
// dozen lines that can be reimplemented bit-exactly anywhere, which keeps
// every experiment reproducible across platforms and languages.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, n) via rejection of the top remainder band.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t threshold = (0ULL - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

// One scramble round of SplitMix64, used as a mixing function when deriving
// per-trial and per-purpose seeds. Documented in the README; do not change
// the constants without versioning the output formats.
inline std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed of trial `index` under master seed `seed`.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
}

// Seed of an independent purpose-specific stream within one trial.
inline std::uint64_t substream_seed(std::uint64_t tseed, std::uint64_t purpose) {
    return mix64(tseed + 0xd1b54a32d192ed03ULL * (purpose + 1));
}

// Seed of a sweep row derived from the master seed and the row index.
inline std::uint64_t sweep_row_seed(std::uint64_t seed, std::uint64_t row) {
    return seed ^ mix64(row + 1);
}

} // namespace coinclerk
