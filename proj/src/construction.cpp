#include "tmlcs/construction.hpp"

#include "tmlcs/analysis.hpp"
#include "tmlcs/errors.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

namespace tmlcs {
namespace {

/// Materialized run lists for levels 0..k, built bottom-up so each level
/// embeds the previous one by reference.
std::vector<Alignment> build_pow2_chain(unsigned k) {
    std::vector<Alignment> chain;
    chain.reserve(k + 1);
    Alignment base;
    base.push_run(0, 1, 1);
    chain.push_back(std::move(base));
    for (unsigned level = 1; level <= k; ++level) {
        const std::uint64_t block = std::uint64_t(1) << (std::uint64_t(1) << (level - 1));
        const Alignment& sub = chain.back();
        Alignment a;
        for (std::uint64_t i = 0; i + 1 < block; ++i) {
            const std::uint64_t x_off = i * block;
            const std::uint64_t y_off = (i + 1) * block;
            // Even block pairs are always equal; odd ones are equal exactly
            // when the adjacent Thue-Morse digits at i/2 agree, and
            // complementary otherwise (then the previous level embeds, its
            // index pairs unchanged under complementation).
            const bool blocks_equal =
                (i % 2 == 0) || tm_digit(i >> 1) == tm_digit((i >> 1) + 1);
            if (blocks_equal) {
                a.push_run(x_off, y_off, block);
            } else {
                for (const AlignmentRun& r : sub.runs())
                    a.push_run(x_off + r.x, y_off + r.y, r.len);
            }
        }
        chain.push_back(std::move(a));
    }
    return chain;
}

} // namespace

BigCount construction_length_pow2(unsigned k) {
    return pow2(std::uint64_t(1) << k) - omission_count(k, k);
}

ConstructionResult construct_pow2(unsigned k, bool materialize,
                                  unsigned materialize_max) {
    ConstructionResult result{ConstructionKind::Pow2Word, k, std::nullopt,
                              construction_length_pow2(k)};
    if (!materialize) return result;
    if (k > materialize_max)
        throw CapExceeded("run list for level " + std::to_string(k) +
                          " exceeds the materialization threshold (max level " +
                          std::to_string(materialize_max) + ")");
    result.alignment = build_pow2_chain(k).back();
    assert(BigCount(result.alignment->match_count()) == result.matched);
    return result;
}

BigCount construction_length_word(unsigned n) {
    if (n == 0) return 0;
    const unsigned k = unsigned(std::bit_width(n) - 1); // floor(log2 n)
    return pow2(n - (std::uint64_t(1) << k)) * construction_length_pow2(k);
}

ConstructionResult construct_word(unsigned n, bool materialize, std::uint64_t cap) {
    ConstructionResult result{ConstructionKind::Word, n, std::nullopt,
                              construction_length_word(n)};
    if (!materialize) return result;
    if (n >= 64 || (std::uint64_t(1) << n) > cap)
        throw CapExceeded("words of length 2^" + std::to_string(n) +
                          " exceed the materialization cap of " +
                          std::to_string(cap) + " symbols");
    if (n == 0) {
        result.alignment = Alignment{};
        return result;
    }
    const unsigned k = unsigned(std::bit_width(n) - 1);
    const Alignment base = build_pow2_chain(k).back();
    const std::uint64_t chunk_len = std::uint64_t(1) << (std::uint64_t(1) << k);
    const std::uint64_t chunks = std::uint64_t(1) << (n - (std::uint64_t(1) << k));
    Alignment a;
    for (std::uint64_t i = 0; i < chunks; ++i) {
        // Chunk i of the two words is always a complementary pair, in one
        // order or the other; either way the level-k pairs apply verbatim.
        const std::uint64_t off = i * chunk_len;
        for (const AlignmentRun& r : base.runs())
            a.push_run(off + r.x, off + r.y, r.len);
    }
    assert(BigCount(a.match_count()) == result.matched);
    result.alignment = std::move(a);
    return result;
}

BigCount construction_length_prefix(std::uint64_t n) {
    if (n == 0) return 0;
    BigCount total = 0;
    for (const Block& b : decompose_prefix(n).blocks)
        total += construction_length_word(b.exponent);
    return total;
}

ConstructionResult construct_prefix(std::uint64_t n, bool materialize,
                                    std::uint64_t cap) {
    ConstructionResult result{ConstructionKind::Prefix, n, std::nullopt,
                              construction_length_prefix(n)};
    if (!materialize) return result;
    if (n > cap)
        throw CapExceeded("prefixes of length " + std::to_string(n) +
                          " exceed the materialization cap of " +
                          std::to_string(cap) + " symbols");
    Alignment a;
    if (n > 0) {
        for (const Block& b : decompose_prefix(n).blocks) {
            // The complement prefix decomposes into the same blocks with
            // flipped leading digits, so each block pair is complementary:
            // the word construction applies, pairs unchanged whichever of
            // the two orders the pair is in.
            const Alignment sub = *construct_word(b.exponent, true, cap).alignment;
            for (const AlignmentRun& r : sub.runs())
                a.push_run(b.start + r.x, b.start + r.y, r.len);
        }
    }
    assert(BigCount(a.match_count()) == result.matched);
    result.alignment = std::move(a);
    return result;
}

bool check_word_floor(unsigned n) {
    // Cross-multiplied form of "misses at most a 4/n fraction":
    // matched * n >= 2^n * (n - 4).
    return construction_length_word(n) * n >= pow2(n) * (BigCount(n) - 4);
}

bool check_prefix_floor(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("check_prefix_floor requires n >= 1");
    // Cross-multiplied form of "misses at most a 16/floor(log2 n)
    // fraction": matched * L >= n * (L - 16).
    const unsigned level = unsigned(std::bit_width(n) - 1);
    return construction_length_prefix(n) * level >=
           BigCount(n) * (BigCount(level) - 16);
}

} // namespace tmlcs
