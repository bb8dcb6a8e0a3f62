#pragma once

#include "tmlcs/bigcount.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tmlcs {

/// Default ceiling for omission_count; the value for k has ~2^k bits, so
/// 14 keeps results around 5000 decimal digits. Raise per call if needed.
inline constexpr unsigned kDefaultOmissionMax = 14;

/// Exact number of positions the recursive construction fails to match
/// between the complementary words of length 2^(2^k). Base values 1 and 2
/// for k = 0, 1; from k = 2 on, with m = 2^(k-1):
///
///   count(k) = 2^m + (2^(m-1) - 1 - count_adjacent_equal(m-1)) * count(k-1)
///
/// One full block of 2^m symbols is always skipped, and each of the
/// complementary odd block pairs inherits the level-(k-1) omissions.
/// Memoized; throws CapExceeded for k > max_k.
BigCount omission_count(unsigned k, unsigned max_k = kDefaultOmissionMax);

/// Coarse upper bound on omission_count(k): 2^(2^k - k + 1) - 2.
BigCount omission_bound_coarse(unsigned k);

/// omission_count(k) <= omission_bound_coarse(k), exact arithmetic.
bool check_omission_bound_coarse(unsigned k);

/// One-step growth bound with the equal-block credit dropped:
/// omission_count(k+1) <= 2^(2^k) + (2^(2^k - 1) - 1) * omission_count(k).
bool check_omission_step(unsigned k);

/// One-step growth bound sharpened by the equal-block count and cleared
/// of the log2(3) exponent by multiplying through by 3:
/// 3 * omission_count(k+1) <= 3 * 2^(2^k) + 2^(2^k) * omission_count(k).
/// Stated for k >= 1.
bool check_omission_step_scaled(unsigned k);

/// Refined omission bound, cleared of the log2(3) exponent via 3^k:
/// 3^k * (omission_count(k) + 6) <= 2^(2^k + 3).
bool check_omission_bound_refined(unsigned k);

/// Floor on the matched count: with M = 2^(2^k) - omission_count(k),
/// 2^(k-1) * M >= 2^(2^k) * (2^(k-1) - 1), i.e. the construction matches
/// at least a (1 - 1/2^(k-1)) fraction of each word. Stated for k >= 1;
/// for k = 0 the floor is negative and the check returns true.
bool check_match_floor(unsigned k);

/// Geometric-over-linear sum bound, evaluated with exact rationals:
/// sum_{j=1..s} 2^j / j <= 2^(s+2) / s - 1. Requires s >= 1.
bool check_geometric_sum_bound(unsigned s);

/// True when the matched fraction strictly grows from level k to k+1:
/// M(k+1) / 2^(2^(k+1)) > M(k) / 2^(2^k), compared exactly as
/// M(k+1) > M(k) * 2^(2^k).
bool match_ratio_increases(unsigned k);

/// True when the matched fraction at level k exceeds 1 - 8/3^k, compared
/// exactly as 3^k * M(k) > (3^k - 8) * 2^(2^k).
bool check_match_ratio_refined_floor(unsigned k);

/// Per-level verification record: exact counts, bound values, and whether
/// each inequality holds at this level.
struct BoundsRow {
    unsigned k = 0;
    BigCount omitted;            ///< omission_count(k)
    BigCount matched;            ///< 2^(2^k) - omitted
    BigCount omission_bound;     ///< omission_bound_coarse(k)
    bool omission_bound_holds = false; ///< omitted <= omission_bound
    bool refined_bound_holds = false;  ///< check_omission_bound_refined(k)
    bool match_floor_holds = false;    ///< check_match_floor(k)
    bool step_bound_holds = false;     ///< incoming step k-1 -> k, scaled
                                       ///< form; vacuously true at k = 0
    std::string omitted_ratio;   ///< omitted / 2^(2^k), 30 significant digits
    std::string matched_ratio;   ///< matched / 2^(2^k), 30 significant digits
};

/// Rows for k = 0..max_k. All comparisons exact; the ratio strings are a
/// display-only formatting of exact integers.
std::vector<BoundsRow> ratio_table(unsigned max_k);

/// num/den rendered with `digits` significant decimal digits, rounded
/// half-to-even, trailing zeros trimmed. Requires 0 <= num and den > 0.
/// Display-only; every comparison in this module is exact.
std::string decimal_ratio(const BigCount& num, const BigCount& den,
                          unsigned digits = 30);

std::string bounds_table_csv(const std::vector<BoundsRow>& rows);
std::string bounds_table_json(const std::vector<BoundsRow>& rows);

} // namespace tmlcs
