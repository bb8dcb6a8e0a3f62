#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tmlcs {

/// A finite binary string, bit-packed into 64-bit limbs.
///
/// Symbol index 0 is the leftmost symbol and lives in bit 0 of limb 0
/// (LSB-first). Limb bits past size() are kept zero so whole-limb
/// operations (comparison, complement) need no special casing.
/// Instances are immutable in practice: every operation returns a new
/// word, so sharing across threads is safe.
class BitWord {
public:
    BitWord() = default;

    /// Zero-filled word of `len` symbols.
    explicit BitWord(std::uint64_t len) : len_(len), limbs_(limb_count(len), 0) {}

    /// Parses a plain ASCII 0/1 string. Throws std::invalid_argument on
    /// any other character.
    static BitWord from_ascii(std::string_view text);

    /// Adopts ready-made limbs. `limbs` must have exactly limb_count(len)
    /// entries; bits past `len` are cleared.
    static BitWord from_limbs(std::uint64_t len, std::vector<std::uint64_t> limbs);

    std::string to_ascii() const;

    std::uint64_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    /// Symbol at index i. Throws std::out_of_range unless i < size().
    bool bit(std::uint64_t i) const {
        if (i >= len_) throw_index(i);
        return (limbs_[i >> 6] >> (i & 63)) & 1u;
    }

    void set_bit(std::uint64_t i, bool value) {
        if (i >= len_) throw_index(i);
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (value)
            limbs_[i >> 6] |= mask;
        else
            limbs_[i >> 6] &= ~mask;
    }

    /// Bitwise complement; an involution.
    BitWord complemented() const;

    /// Symbols in reverse order.
    BitWord reversed() const;

    /// Copy of `len` symbols starting at `pos`. Requires pos+len <= size().
    BitWord subword(std::uint64_t pos, std::uint64_t len) const;

    /// Appends `other` after the current symbols.
    void append(const BitWord& other);

    /// Raw limbs, tail bits zero. Limb i holds symbols [64i, 64i+64).
    const std::vector<std::uint64_t>& limbs() const { return limbs_; }

    friend bool operator==(const BitWord& a, const BitWord& b) {
        return a.len_ == b.len_ && a.limbs_ == b.limbs_;
    }

    static std::uint64_t limb_count(std::uint64_t len) { return (len + 63) >> 6; }

private:
    [[noreturn]] void throw_index(std::uint64_t i) const;
    void clear_tail();

    std::uint64_t len_ = 0;
    std::vector<std::uint64_t> limbs_;
};

} // namespace tmlcs
