// Copyright (c) 2026 The Coinclerk developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.
#include "coinclerk/kernels.hpp"

#include <bit>

namespace coinclerk::kernels::scalar {

bool any_and3(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* m,
              std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) {
        if (a[i] & b[i] & m[i]) return true;
    }
    return false;
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < words; ++i) {
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    }
    return total;
}

} // namespace coinclerk::kernels::scalar
