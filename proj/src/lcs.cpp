#include "tmlcs/lcs.hpp"

#include "tmlcs/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tmlcs {
namespace {

std::vector<std::uint8_t> to_bytes(const BitWord& w) {
    std::vector<std::uint8_t> out(w.size());
    const auto& limbs = w.limbs();
    for (std::uint64_t i = 0; i < w.size(); ++i)
        out[i] = (limbs[i >> 6] >> (i & 63)) & 1u;
    return out;
}

void check_budget(std::uint64_t xs, std::uint64_t ys, std::uint64_t budget) {
    const unsigned __int128 cells = (unsigned __int128)xs * ys;
    if (cells > budget)
        throw BudgetExceeded("LCS table of " + std::to_string(xs) + " x " +
                             std::to_string(ys) +
                             " cells exceeds the work budget of " +
                             std::to_string(budget));
}

std::uint64_t quadratic_length(const std::vector<std::uint8_t>& longer,
                               const std::vector<std::uint8_t>& shorter) {
    // One row over the shorter word plus a running diagonal cell.
    std::vector<std::uint32_t> row(shorter.size() + 1, 0);
    for (const std::uint8_t c : longer) {
        std::uint32_t diag = 0;
        for (std::size_t j = 0; j < shorter.size(); ++j) {
            const std::uint32_t above = row[j + 1];
            if (c == shorter[j])
                row[j + 1] = diag + 1;
            else if (row[j] > above)
                row[j + 1] = row[j];
            diag = above;
        }
    }
    return row[shorter.size()];
}

/// Word-packed LCS row state over a fixed first word A (Crochemore/
/// Iliopoulos/Pinzon/Reid scheme). V starts all ones over |A| bits; each
/// second-word symbol c updates V = (V + (V & M[c])) | (V XOR (V & M[c])),
/// after which |A| - popcount(V) is the LCS with the symbols fed so far.
/// The subtraction in the textbook form degenerates to XOR because
/// V & M[c] is a bitwise subset of V.
class BitRowKernel {
public:
    BitRowKernel(const std::uint64_t* m0, const std::uint64_t* m1,
                 std::uint64_t bits)
        : m0_(m0), m1_(m1), bits_(bits), v_(BitWord::limb_count(bits), ~0ull) {
        mask_tail();
    }

    void step(unsigned c) {
        const std::uint64_t* m = c ? m1_ : m0_;
        std::uint64_t carry = 0;
        for (std::size_t l = 0; l < v_.size(); ++l) {
            const std::uint64_t v = v_[l];
            const std::uint64_t u = v & m[l];
            const unsigned __int128 sum = (unsigned __int128)v + u + carry;
            carry = std::uint64_t(sum >> 64);
            v_[l] = std::uint64_t(sum) | (v ^ u);
        }
        mask_tail();
    }

    std::uint64_t matched() const {
        std::uint64_t ones = 0;
        for (const std::uint64_t v : v_) ones += std::uint64_t(std::popcount(v));
        return bits_ - ones;
    }

private:
    void mask_tail() {
        if (bits_ & 63) v_.back() &= (std::uint64_t(1) << (bits_ & 63)) - 1;
    }

    const std::uint64_t* m0_;
    const std::uint64_t* m1_;
    std::uint64_t bits_;
    std::vector<std::uint64_t> v_;
};

/// Match masks over a byte range: m[c] bit i set iff a[i] == c.
struct MatchMasks {
    std::vector<std::uint64_t> m0, m1;

    MatchMasks(const std::uint8_t* a, std::uint64_t len)
        : m0(BitWord::limb_count(len), 0), m1(m0) {
        for (std::uint64_t i = 0; i < len; ++i) {
            auto& m = a[i] ? m1 : m0;
            m[i >> 6] |= std::uint64_t(1) << (i & 63);
        }
    }
};

std::uint64_t bitparallel_length(const BitWord& x, const BitWord& y) {
    const BitWord& a = x.size() <= y.size() ? x : y;
    const BitWord& b = x.size() <= y.size() ? y : x;
    if (a.empty()) return 0;
    // Binary alphabet: the '1' mask is the word itself, '0' its complement.
    const std::vector<std::uint64_t>& m1 = a.limbs();
    std::vector<std::uint64_t> m0(m1.size());
    for (std::size_t l = 0; l < m1.size(); ++l) m0[l] = ~m1[l];
    if (a.size() & 63) m0.back() &= (std::uint64_t(1) << (a.size() & 63)) - 1;

    BitRowKernel kernel(m0.data(), m1.data(), a.size());
    const auto& blimbs = b.limbs();
    for (std::uint64_t i = 0; i < blimbs.size(); ++i) {
        const std::uint64_t limb = blimbs[i];
        const unsigned bits =
            i + 1 < blimbs.size() || (b.size() & 63) == 0 ? 64 : unsigned(b.size() & 63);
        for (unsigned r = 0; r < bits; ++r) kernel.step((limb >> r) & 1u);
    }
    return kernel.matched();
}

/// lengths[j] = LCS(a[0..alen), b[0..j)) for 0 <= j <= blen.
std::vector<std::uint32_t> row_lengths(const std::uint8_t* a, std::uint64_t alen,
                                       const std::uint8_t* b, std::uint64_t blen) {
    std::vector<std::uint32_t> lengths(blen + 1, 0);
    if (alen == 0) return lengths;
    const MatchMasks masks(a, alen);
    BitRowKernel kernel(masks.m0.data(), masks.m1.data(), alen);
    for (std::uint64_t j = 0; j < blen; ++j) {
        kernel.step(b[j]);
        lengths[j + 1] = std::uint32_t(kernel.matched());
    }
    return lengths;
}

/// Divide-and-conquer recovery of one optimal alignment of
/// x[xl..xr) vs y[yl..yr). Deterministic: the y split takes the smallest
/// optimal index, and single-symbol base cases match at the smallest
/// available index.
void hirschberg(const std::vector<std::uint8_t>& x,
                const std::vector<std::uint8_t>& y, std::uint64_t xl,
                std::uint64_t xr, std::uint64_t yl, std::uint64_t yr,
                Alignment& out) {
    const std::uint64_t xn = xr - xl;
    const std::uint64_t yn = yr - yl;
    if (xn == 0 || yn == 0) return;
    if (xn == 1) {
        for (std::uint64_t j = yl; j < yr; ++j)
            if (y[j] == x[xl]) {
                out.push_run(xl, j, 1);
                return;
            }
        return;
    }
    if (yn == 1) {
        for (std::uint64_t i = xl; i < xr; ++i)
            if (x[i] == y[yl]) {
                out.push_run(i, yl, 1);
                return;
            }
        return;
    }

    const std::uint64_t mid = xl + xn / 2;
    const auto fwd = row_lengths(x.data() + xl, mid - xl, y.data() + yl, yn);

    const std::vector<std::uint8_t> x_rev(x.rbegin() + std::int64_t(x.size() - xr),
                                          x.rbegin() + std::int64_t(x.size() - mid));
    const std::vector<std::uint8_t> y_rev(y.rbegin() + std::int64_t(y.size() - yr),
                                          y.rbegin() + std::int64_t(y.size() - yl));
    const auto bwd = row_lengths(x_rev.data(), x_rev.size(), y_rev.data(), yn);

    std::uint64_t best_t = 0;
    std::uint64_t best = 0;
    for (std::uint64_t t = 0; t <= yn; ++t) {
        const std::uint64_t candidate = std::uint64_t(fwd[t]) + bwd[yn - t];
        if (candidate > best) {
            best = candidate;
            best_t = t;
        }
    }
    hirschberg(x, y, xl, mid, yl, yl + best_t, out);
    hirschberg(x, y, mid, xr, yl + best_t, yr, out);
}

std::uint64_t default_budget(LcsAlgorithm a) {
    return a == LcsAlgorithm::QuadraticDp ? kQuadraticBudget : kBitParallelBudget;
}

} // namespace

const char* algorithm_name(LcsAlgorithm a) {
    switch (a) {
        case LcsAlgorithm::QuadraticDp: return "quadratic-dp";
        case LcsAlgorithm::LinearSpace: return "linear-space";
        case LcsAlgorithm::BitParallel: return "bit-parallel";
    }
    return "unknown";
}

LcsAlgorithm algorithm_from_name(const std::string& name) {
    if (name == "quadratic-dp") return LcsAlgorithm::QuadraticDp;
    if (name == "linear-space") return LcsAlgorithm::LinearSpace;
    if (name == "bit-parallel") return LcsAlgorithm::BitParallel;
    throw std::invalid_argument(
        "unknown algorithm '" + name +
        "' (expected quadratic-dp, linear-space, or bit-parallel)");
}

LcsResult lcs(const BitWord& x, const BitWord& y, LcsAlgorithm algorithm,
              std::optional<std::uint64_t> budget_override) {
    check_budget(x.size(), y.size(), budget_override.value_or(default_budget(algorithm)));
    LcsResult result;
    result.algorithm = algorithm;
    switch (algorithm) {
        case LcsAlgorithm::QuadraticDp: {
            const auto xb = to_bytes(x);
            const auto yb = to_bytes(y);
            result.length = xb.size() >= yb.size() ? quadratic_length(xb, yb)
                                                   : quadratic_length(yb, xb);
            break;
        }
        case LcsAlgorithm::BitParallel:
            result.length = bitparallel_length(x, y);
            break;
        case LcsAlgorithm::LinearSpace: {
            const auto xb = to_bytes(x);
            const auto yb = to_bytes(y);
            Alignment a;
            hirschberg(xb, yb, 0, xb.size(), 0, yb.size(), a);
            result.length = a.match_count();
            result.alignment = std::move(a);
            break;
        }
    }
    return result;
}

LcsResult word_lcs(unsigned n, LcsAlgorithm algorithm,
                   std::optional<std::uint64_t> budget_override) {
    const BitWord x = tm_word(n, 0);
    return lcs(x, x.complemented(), algorithm, budget_override);
}

LcsResult prefix_lcs(std::uint64_t n, LcsAlgorithm algorithm,
                     std::optional<std::uint64_t> budget_override) {
    const BitWord x = tm_prefix(n);
    return lcs(x, x.complemented(), algorithm, budget_override);
}

std::string to_json(const LcsResult& r, std::uint64_t x_len, std::uint64_t y_len) {
    std::string out = "{\"length\":" + std::to_string(r.length) +
                      ",\"algorithm\":\"" + algorithm_name(r.algorithm) + "\"";
    if (r.alignment)
        out += ",\"alignment\":" + to_json(AlignmentDoc{x_len, y_len, *r.alignment});
    out += "}";
    return out;
}

} // namespace tmlcs
