// Copyright (c) 2026 The Coinclerk developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

// AVX2 variants of the word-level set kernels. This translation unit is
// compiled with -mavx2 and must only be entered after the dispatcher has
// confirmed AVX2 support at runtime.
#include "coinclerk/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace coinclerk::kernels::avx2 {

bool any_and3(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* m,
              std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i vm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + i));
        const __m256i v = _mm256_and_si256(_mm256_and_si256(va, vb), vm);
        if (!_mm256_testz_si256(v, v)) return true;
    }
    for (; i < words; ++i) {
        if (a[i] & b[i] & m[i]) return true;
    }
    return false;
}

namespace {

// Per-byte popcount via nibble lookup (Mula); summed into 64-bit lanes.
inline __m256i popcount_bytes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

} // namespace

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i counts = popcount_bytes(_mm256_and_si256(va, vb));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < words; ++i) {
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    }
    return total;
}

} // namespace coinclerk::kernels::avx2
