#pragma once

#include "tmlcs/alignment.hpp"
#include "tmlcs/bigcount.hpp"
#include "tmlcs/tm.hpp"

#include <cstdint>
#include <optional>

namespace tmlcs {

/// Largest k for which construct_pow2 will materialize the run list.
/// The k=5 alignment already has ~50M runs; above the threshold only
/// exact counts are produced.
inline constexpr unsigned kDefaultPow2MaterializeMax = 4;

enum class ConstructionKind { Pow2Word, Word, Prefix };

/// An explicit common subsequence between a pair of complementary words,
/// together with the exact count of matched positions. The count is exact
/// even when the alignment itself is too large to materialize.
struct ConstructionResult {
    ConstructionKind kind;
    std::uint64_t parameter = 0; ///< k for Pow2Word, n otherwise
    std::optional<Alignment> alignment;
    BigCount matched = 0;
};

/// Number of positions matched by construct_pow2(k), i.e.
/// 2^(2^k) - omission_count(k). Exact for any k the recurrence reaches.
BigCount construction_length_pow2(unsigned k);

/// Recursive common subsequence between the two complementary words of
/// length 2^(2^k) obtained by iterating the doubling morphism 2^k times
/// from 0 and from 1.
///
/// Base case k = 0 matches the one agreeing position of "01" vs "10",
/// the pair (0, 1). For k >= 1, with B = 2^(2^(k-1)), both words split
/// into B blocks of size B; block i of the first word is matched against
/// block i+1 of the second for 0 <= i < B-1. Even i: the blocks are
/// always equal, one full diagonal run. Odd i: the blocks are equal
/// exactly when tm_digit(i/2) == tm_digit(i/2 + 1) (full run); otherwise
/// they are complementary and the level-(k-1) construction is embedded,
/// through complement_alignment when the pair order is swapped. The last
/// block of the first word and the first block of the second are never
/// matched.
ConstructionResult construct_pow2(unsigned k, bool materialize = true,
                                  unsigned materialize_max = kDefaultPow2MaterializeMax);

/// Matched-position count of construct_word(n): 0 for n = 0, and
/// 2^(n - 2^k) * construction_length_pow2(k) with k = floor(log2 n)
/// otherwise.
BigCount construction_length_word(unsigned n);

/// Common subsequence between the morphism word of length 2^n starting
/// from 0 and its complement. n = 2^k delegates to construct_pow2(k).
/// For 2^k < n < 2^(k+1) both words split into 2^(n - 2^k) chunks of
/// length 2^(2^k); chunk i of one word is always the complement of chunk
/// i of the other, so the level-k construction (or its
/// complement_alignment when the roles are swapped) is embedded at every
/// chunk. n = 0 yields the empty alignment: the words are "0" and "1".
ConstructionResult construct_word(unsigned n, bool materialize = true,
                                  std::uint64_t cap = kDefaultMaterializeCap);

/// Matched-position count of construct_prefix(n): the sum of
/// construction_length_word(k_j) over the blocks of decompose_prefix(n).
BigCount construction_length_prefix(std::uint64_t n);

/// Common subsequence between the length-n Thue-Morse prefix and its
/// complement. decompose_prefix(n) splits the prefix into morphism words;
/// the complement prefix decomposes identically with flipped leading
/// digits, so every block pair is complementary and construct_word covers
/// it (complement_alignment when the block's leading digit is 1), shifted
/// to the block offset. n = 0 yields the empty alignment.
ConstructionResult construct_prefix(std::uint64_t n, bool materialize = true,
                                    std::uint64_t cap = kDefaultMaterializeCap);

/// True when construct_word(n) meets the guaranteed floor, checked in
/// exact cross-multiplied form: construction_length_word(n) * n >=
/// 2^n * (n - 4).
bool check_word_floor(unsigned n);

/// True when construct_prefix(n) meets the guaranteed floor, checked in
/// exact cross-multiplied form with L = floor(log2 n):
/// construction_length_prefix(n) * L >= n * (L - 16). Requires n >= 1.
bool check_prefix_floor(std::uint64_t n);

} // namespace tmlcs
