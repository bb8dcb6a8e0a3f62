#pragma once

#include "tmlcs/alignment.hpp"
#include "tmlcs/bitword.hpp"
#include "tmlcs/tm.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace tmlcs {

enum class LcsAlgorithm { QuadraticDp, LinearSpace, BitParallel };

/// Work budgets as maximum DP cell count |x| * |y|; exceeding one raises
/// BudgetExceeded instead of silently truncating. The word-packed
/// algorithms touch ~64 cells per machine word, hence the larger default.
inline constexpr std::uint64_t kQuadraticBudget = 1ull << 30;
inline constexpr std::uint64_t kBitParallelBudget = 1ull << 34;

const char* algorithm_name(LcsAlgorithm a);

/// Parses "quadratic-dp", "linear-space", or "bit-parallel". Throws
/// std::invalid_argument otherwise.
LcsAlgorithm algorithm_from_name(const std::string& name);

struct LcsResult {
    std::uint64_t length = 0;
    LcsAlgorithm algorithm = LcsAlgorithm::BitParallel;
    /// Present only for LinearSpace, which recovers one optimal matching.
    std::optional<Alignment> alignment;
};

/// Exact LCS length of two binary words; all three algorithms agree.
///
///  - QuadraticDp: classic two-row table, O(|x|*|y|) time, O(min) space,
///    length only.
///  - LinearSpace: divide-and-conquer recovery of one optimal Alignment,
///    word-packed rows inside each halving step. Deterministic: ties are
///    broken toward the smallest split index, and base cases match at the
///    smallest available index.
///  - BitParallel: word-packed row encoding, length only, ~64 cells per
///    machine-word operation.
///
/// `budget_override` replaces the algorithm's default cell budget.
LcsResult lcs(const BitWord& x, const BitWord& y,
              LcsAlgorithm algorithm = LcsAlgorithm::BitParallel,
              std::optional<std::uint64_t> budget_override = std::nullopt);

/// LCS length of the exponent-n morphism word and its complement
/// (length-2^n words generated from 0 and from 1).
LcsResult word_lcs(unsigned n, LcsAlgorithm algorithm = LcsAlgorithm::BitParallel,
                   std::optional<std::uint64_t> budget_override = std::nullopt);

/// LCS length of the length-n Thue-Morse prefix and its complement.
LcsResult prefix_lcs(std::uint64_t n,
                     LcsAlgorithm algorithm = LcsAlgorithm::BitParallel,
                     std::optional<std::uint64_t> budget_override = std::nullopt);

/// JSON form: {"length": N, "algorithm": "...", "alignment": {...}?} with
/// the alignment in the alignment-document layout when present.
std::string to_json(const LcsResult& r, std::uint64_t x_len, std::uint64_t y_len);

} // namespace tmlcs
