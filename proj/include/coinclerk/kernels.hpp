// Copyright (c) 2026 The Coinclerk developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include "coinclerk/bitset.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

namespace coinclerk::kernels {

// Word-level set kernels behind the hot simulation loops. Each has a scalar
// reference implementation and may have SIMD variants; the dispatched entry
// points below select an implementation once at startup (overridable with
// the COINCLERK_SIMD environment variable: auto|scalar|avx2).

namespace scalar {
// True iff (a & b & m) has any bit set.
bool any_and3(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* m,
              std::size_t words);
// Number of bits set in (a & b).
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
} // namespace scalar

#if defined(COINCLERK_HAVE_AVX2)
namespace avx2 {
bool any_and3(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* m,
              std::size_t words);
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
} // namespace avx2
#endif

enum class Impl { Scalar, Avx2 };

Impl active_impl();
bool impl_available(Impl impl);
void set_impl(Impl impl); // throws ValidationError if unavailable
std::string impl_name(Impl impl);

bool any_and3(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* m,
              std::size_t words);
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

// Convenience wrappers over NodeBitset (same length required).
inline bool intersect_any_masked(const NodeBitset& a, const NodeBitset& b, const NodeBitset& m) {
    return any_and3(a.words(), b.words(), m.words(), a.word_count());
}

inline std::uint64_t intersect_count(const NodeBitset& a, const NodeBitset& b) {
    return and_popcount(a.words(), b.words(), a.word_count());
}

} // namespace coinclerk::kernels
