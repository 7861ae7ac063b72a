// Copyright (c) 2026 The Coinclerk developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coinclerk {

using NodeId = std::uint32_t;

// Parameter combination cannot satisfy the requested construction or bound.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input (CLI flags, malformed encodings, out-of-range parameters).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OwnershipError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SigningError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidChainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_hex(const std::string& hex);

inline void append_u32_be(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

inline void append_u64_be(std::vector<std::uint8_t>& out, std::uint64_t v) {
    append_u32_be(out, static_cast<std::uint32_t>(v >> 32));
    append_u32_be(out, static_cast<std::uint32_t>(v));
}

} // namespace coinclerk
