// Copyright (c) 2026 The Coinclerk developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>

namespace coinclerk {

using Digest256 = std::array<std::uint8_t, 32>;

// SHA-256 of a byte span (OpenSSL-backed).
Digest256 sha256(std::span<const std::uint8_t> data);

// Hash used to derive coin-specific clerk spaces. Defaults to sha256;
// swappable so constructions can be reproduced against other backends.
using HashFn = std::function<Digest256(std::span<const std::uint8_t>)>;

// 256-bit digest taken as a big-endian integer, reduced mod n.
std::uint32_t digest_mod(const Digest256& digest, std::uint32_t n);

} // namespace coinclerk
