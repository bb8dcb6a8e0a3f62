#include "tmlcs/bitword.hpp"

#include <stdexcept>
#include <string>

namespace tmlcs {

BitWord BitWord::from_ascii(std::string_view text) {
    BitWord w(text.size());
    for (std::uint64_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '1')
            w.limbs_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else if (c != '0')
            throw std::invalid_argument(
                "binary word may contain only '0'/'1', got '" + std::string(1, c) +
                "' at index " + std::to_string(i));
    }
    return w;
}

BitWord BitWord::from_limbs(std::uint64_t len, std::vector<std::uint64_t> limbs) {
    if (limbs.size() != limb_count(len))
        throw std::invalid_argument("limb count does not match length");
    BitWord w;
    w.len_ = len;
    w.limbs_ = std::move(limbs);
    w.clear_tail();
    return w;
}

std::string BitWord::to_ascii() const {
    std::string s(len_, '0');
    for (std::uint64_t i = 0; i < len_; ++i)
        if ((limbs_[i >> 6] >> (i & 63)) & 1u) s[i] = '1';
    return s;
}

BitWord BitWord::complemented() const {
    BitWord w(*this);
    for (auto& limb : w.limbs_) limb = ~limb;
    w.clear_tail();
    return w;
}

BitWord BitWord::reversed() const {
    BitWord w(len_);
    for (std::uint64_t i = 0; i < len_; ++i)
        if ((limbs_[i >> 6] >> (i & 63)) & 1u) {
            const std::uint64_t j = len_ - 1 - i;
            w.limbs_[j >> 6] |= std::uint64_t(1) << (j & 63);
        }
    return w;
}

BitWord BitWord::subword(std::uint64_t pos, std::uint64_t len) const {
    if (pos > len_ || len > len_ - pos)
        throw std::out_of_range("subword [" + std::to_string(pos) + ", +" +
                                std::to_string(len) + ") exceeds length " +
                                std::to_string(len_));
    BitWord w(len);
    const std::uint64_t base = pos >> 6;
    const unsigned off = pos & 63;
    for (std::uint64_t j = 0; j < w.limbs_.size(); ++j) {
        std::uint64_t limb = limbs_[base + j] >> off;
        if (off != 0 && base + j + 1 < limbs_.size())
            limb |= limbs_[base + j + 1] << (64 - off);
        w.limbs_[j] = limb;
    }
    w.clear_tail();
    return w;
}

void BitWord::append(const BitWord& other) {
    if (&other == this) {
        BitWord copy(other);
        append(copy);
        return;
    }
    const unsigned off = len_ & 63;
    const std::uint64_t new_len = len_ + other.len_;
    limbs_.resize(limb_count(new_len), 0);
    const std::uint64_t base = len_ >> 6;
    for (std::uint64_t j = 0; j < other.limbs_.size(); ++j) {
        const std::uint64_t limb = other.limbs_[j];
        if (off == 0) {
            limbs_[base + j] = limb;
        } else {
            limbs_[base + j] |= limb << off;
            if (base + j + 1 < limbs_.size()) limbs_[base + j + 1] = limb >> (64 - off);
        }
    }
    len_ = new_len;
    clear_tail();
}

void BitWord::throw_index(std::uint64_t i) const {
    throw std::out_of_range("index " + std::to_string(i) +
                            " out of range for word of length " +
                            std::to_string(len_));
}

void BitWord::clear_tail() {
    const unsigned off = len_ & 63;
    if (off != 0 && !limbs_.empty())
        limbs_.back() &= (std::uint64_t(1) << off) - 1;
}

} // namespace tmlcs
