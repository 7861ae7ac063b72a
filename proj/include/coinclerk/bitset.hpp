// Copyright (c) 2026 The Coinclerk developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include "coinclerk/common.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace coinclerk {

// Fixed-width set of node ids backed by 64-bit words. Bits above `size()`
// are kept zero so word-level kernels need no tail masking.
class NodeBitset {
  public:
    NodeBitset() = default;
    explicit NodeBitset(std::uint32_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::uint32_t size() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* words() const { return words_.data(); }
    std::uint64_t* words() { return words_.data(); }

    void set(std::uint32_t i) { words_[i >> 6] |= (1ULL << (i & 63)); }
    void reset(std::uint32_t i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void clear() { words_.assign(words_.size(), 0); }

    std::uint32_t count() const {
        std::uint32_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    // All-ones over the first `nbits` positions.
    static NodeBitset full(std::uint32_t nbits) {
        NodeBitset s(nbits);
        for (std::uint32_t i = 0; i < nbits; ++i) s.set(i);
        return s;
    }

    NodeBitset operator~() const {
        NodeBitset out(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
        out.mask_tail();
        return out;
    }

    std::vector<NodeId> to_vector() const {
        std::vector<NodeId> out;
        out.reserve(count());
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                out.push_back(static_cast<NodeId>(w * 64 + b));
                bits &= bits - 1;
            }
        }
        return out;
    }

    friend bool operator==(const NodeBitset& a, const NodeBitset& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

  private:
    void mask_tail() {
        const std::uint32_t rem = nbits_ & 63;
        if (rem != 0 && !words_.empty()) words_.back() &= (1ULL << rem) - 1;
    }

    std::uint32_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace coinclerk
