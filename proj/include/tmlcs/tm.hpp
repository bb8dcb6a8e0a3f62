#pragma once

#include "tmlcs/bigcount.hpp"
#include "tmlcs/bitword.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace tmlcs {

/// Default limit on how many symbols a single word or prefix may
/// materialize (2^24). Larger requests raise CapExceeded.
inline constexpr std::uint64_t kDefaultMaterializeCap = std::uint64_t(1) << 24;

/// Digit i of the Thue-Morse sequence: the parity of the number of set
/// bits of i. Works for any 64-bit index, far past the materialization cap.
inline int tm_digit(std::uint64_t i) { return std::popcount(i) & 1; }

/// Applies the morphism 0 -> 01, 1 -> 10 to every symbol.
BitWord morphism_apply(const BitWord& w);

/// The n'th Thue-Morse word when digit == 0 (length 2^n); its bitwise
/// complement when digit == 1.
BitWord tm_word(unsigned n, int digit, std::uint64_t cap = kDefaultMaterializeCap);

/// Prefix of length n of the Thue-Morse sequence.
BitWord tm_prefix(std::uint64_t n, std::uint64_t cap = kDefaultMaterializeCap);

/// True iff the binary representation of n ends in a maximal run of 1s of
/// odd length; equivalently tm_digit(n) == tm_digit(n + 1).
inline bool ends_in_odd_ones(std::uint64_t n) {
    return (std::countr_one(n) & 1) == 1;
}

/// Number of indices 0 <= i < 2^n - 1 whose Thue-Morse digit equals the
/// next one. Closed form: (2^n - 1)/3 for even n, (2^n - 2)/3 for odd n.
/// Requires n >= 1.
BigCount count_adjacent_equal(unsigned n);

/// One block of a prefix decomposition: the 2^exponent symbols starting at
/// `start` spell the exponent'th Thue-Morse word when digit == 0, its
/// complement when digit == 1.
struct Block {
    unsigned exponent;
    std::uint64_t start;
    int digit;

    friend bool operator==(const Block&, const Block&) = default;
};

/// A prefix written as a concatenation of Thue-Morse words, one block per
/// set bit of the length, exponents strictly decreasing.
struct BlockDecomposition {
    std::vector<Block> blocks;
    std::uint64_t total_length = 0;
};

/// Decomposes the length-n prefix along the binary representation of n.
/// Requires n >= 1.
BlockDecomposition decompose_prefix(std::uint64_t n);

/// Renders a decomposition back into the concatenation of its blocks.
BitWord render_decomposition(const BlockDecomposition& d,
                             std::uint64_t cap = kDefaultMaterializeCap);

} // namespace tmlcs
