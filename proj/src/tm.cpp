#include "tmlcs/tm.hpp"

#include "tmlcs/errors.hpp"

#include <stdexcept>
#include <string>

namespace tmlcs {
namespace {

/// Thue-Morse digits 0..63 packed LSB-first: bit r = tm_digit(r).
constexpr std::uint64_t kTM64 = 0x6996966996696996ull;

/// Spreads the low 32 bits of x to the even bit positions.
std::uint64_t spread_even(std::uint64_t x) {
    x &= 0xFFFFFFFFull;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

/// Expands 32 input symbols into 64: symbol b becomes the pair (b, 1-b).
std::uint64_t morphism_half(std::uint64_t half) {
    const std::uint64_t even = spread_even(half);
    return even | ((even ^ 0x5555555555555555ull) << 1);
}

/// Limb q of the infinite Thue-Morse sequence (symbols 64q .. 64q+63):
/// tm_digit(64q + r) = tm_digit(q) XOR tm_digit(r).
std::uint64_t tm_limb(std::uint64_t q) { return tm_digit(q) ? ~kTM64 : kTM64; }

} // namespace

BitWord morphism_apply(const BitWord& w) {
    std::vector<std::uint64_t> out(BitWord::limb_count(2 * w.size()), 0);
    const auto& in = w.limbs();
    for (std::uint64_t i = 0; i < in.size(); ++i) {
        out[2 * i] = morphism_half(in[i]);
        if (2 * i + 1 < out.size()) out[2 * i + 1] = morphism_half(in[i] >> 32);
    }
    return BitWord::from_limbs(2 * w.size(), std::move(out));
}

BitWord tm_word(unsigned n, int digit, std::uint64_t cap) {
    if (n >= 64 || (std::uint64_t(1) << n) > cap)
        throw CapExceeded("word of length 2^" + std::to_string(n) +
                          " exceeds the materialization cap of " +
                          std::to_string(cap) + " symbols");
    BitWord w = tm_prefix(std::uint64_t(1) << n, cap);
    return digit ? w.complemented() : w;
}

BitWord tm_prefix(std::uint64_t n, std::uint64_t cap) {
    if (n > cap)
        throw CapExceeded("prefix of length " + std::to_string(n) +
                          " exceeds the materialization cap of " +
                          std::to_string(cap) + " symbols");
    std::vector<std::uint64_t> limbs(BitWord::limb_count(n));
    for (std::uint64_t q = 0; q < limbs.size(); ++q) limbs[q] = tm_limb(q);
    return BitWord::from_limbs(n, std::move(limbs));
}

BigCount count_adjacent_equal(unsigned n) {
    if (n == 0) throw std::invalid_argument("count_adjacent_equal requires n >= 1");
    // (2^n - 1)/3 for even n, (2^n - 2)/3 for odd n; both divisions exact.
    BigCount v = pow2(n) - (n % 2 == 0 ? 1 : 2);
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 3);
    return v;
}

BlockDecomposition decompose_prefix(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("decompose_prefix requires n >= 1");
    BlockDecomposition d;
    d.total_length = n;
    std::uint64_t start = 0;
    for (int k = 63; k >= 0; --k) {
        if ((n >> k) & 1u) {
            d.blocks.push_back(
                {unsigned(k), start, tm_digit(start >> unsigned(k))});
            start += std::uint64_t(1) << k;
        }
    }
    return d;
}

BitWord render_decomposition(const BlockDecomposition& d, std::uint64_t cap) {
    if (d.total_length > cap)
        throw CapExceeded("decomposition of length " + std::to_string(d.total_length) +
                          " exceeds the materialization cap of " +
                          std::to_string(cap) + " symbols");
    BitWord out;
    for (const Block& b : d.blocks) out.append(tm_word(b.exponent, b.digit, cap));
    return out;
}

} // namespace tmlcs
