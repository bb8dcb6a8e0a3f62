#include "tmlcs/analysis.hpp"

#include "tmlcs/errors.hpp"
#include "tmlcs/tm.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace tmlcs {
namespace {

BigCount matched_count(unsigned k) {
    return pow2(std::uint64_t(1) << k) - omission_count(k, k);
}

} // namespace

BigCount omission_count(unsigned k, unsigned max_k) {
    if (k > max_k)
        throw CapExceeded("omission count for level " + std::to_string(k) +
                          " exceeds the configured maximum of " +
                          std::to_string(max_k));
    static std::mutex mutex;
    static std::vector<BigCount> memo{1, 2};
    std::lock_guard<std::mutex> lock(mutex);
    while (memo.size() <= k) {
        const unsigned j = unsigned(memo.size());
        const std::uint64_t m = std::uint64_t(1) << (j - 1);
        // One whole block of 2^m symbols is always skipped; every
        // complementary odd block pair (all odd pairs except the
        // adjacent-equal ones) inherits the previous level's omissions.
        const BigCount coefficient =
            pow2(m - 1) - 1 - count_adjacent_equal(unsigned(m - 1));
        memo.push_back(pow2(m) + coefficient * memo.back());
    }
    return memo[k];
}

BigCount omission_bound_coarse(unsigned k) {
    return pow2((std::uint64_t(1) << k) - k + 1) - 2;
}

bool check_omission_bound_coarse(unsigned k) {
    return omission_count(k, k) <= omission_bound_coarse(k);
}

bool check_omission_step(unsigned k) {
    const std::uint64_t m = std::uint64_t(1) << k;
    return omission_count(k + 1, k + 1) <=
           pow2(m) + (pow2(m - 1) - 1) * omission_count(k, k);
}

bool check_omission_step_scaled(unsigned k) {
    const std::uint64_t m = std::uint64_t(1) << k;
    return 3 * omission_count(k + 1, k + 1) <=
           3 * pow2(m) + pow2(m) * omission_count(k, k);
}

bool check_omission_bound_refined(unsigned k) {
    return powi(3, k) * (omission_count(k, k) + 6) <=
           pow2((std::uint64_t(1) << k) + 3);
}

bool check_match_floor(unsigned k) {
    if (k == 0) return true; // floor is negative at level 0
    return pow2(k - 1) * matched_count(k) >=
           pow2(std::uint64_t(1) << k) * (pow2(k - 1) - 1);
}

bool check_geometric_sum_bound(unsigned s) {
    if (s == 0)
        throw std::invalid_argument("check_geometric_sum_bound requires s >= 1");
    BigRational sum = 0;
    for (unsigned j = 1; j <= s; ++j) {
        BigRational term(pow2(j), BigCount(j));
        term.canonicalize();
        sum += term;
    }
    BigRational bound(pow2(std::uint64_t(s) + 2), BigCount(s));
    bound.canonicalize();
    bound -= 1;
    return sum <= bound;
}

bool match_ratio_increases(unsigned k) {
    // matched(k+1)/2^(2^(k+1)) > matched(k)/2^(2^k), cross-multiplied by
    // 2^(2^(k+1)); the quotient of the denominators is 2^(2^k) itself.
    return matched_count(k + 1) > matched_count(k) * pow2(std::uint64_t(1) << k);
}

bool check_match_ratio_refined_floor(unsigned k) {
    return powi(3, k) * matched_count(k) >
           (powi(3, k) - 8) * pow2(std::uint64_t(1) << k);
}

std::string decimal_ratio(const BigCount& num, const BigCount& den,
                          unsigned digits) {
    if (digits == 0) throw std::invalid_argument("need at least one digit");
    if (den <= 0 || num < 0 || num > den)
        throw std::invalid_argument("decimal_ratio expects 0 <= num/den <= 1");
    if (num == 0) return "0";
    if (num == den) return "1";

    // Position of the first significant digit: z zeros follow "0.".
    unsigned z = 0;
    BigCount probe = num * 10;
    while (probe < den) {
        probe *= 10;
        ++z;
    }

    BigCount scaled = num * powi(10, z + digits);
    BigCount q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    const int half = cmp(2 * r, den);
    if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t())))
        q += 1;

    // Rounding may carry into one more digit (0.0999.. -> 0.1).
    std::string body = q.get_str();
    if (body.size() > digits) {
        if (z == 0) return "1";
        --z;
        body.pop_back(); // the overflowed value is 10^digits; drop one zero
    }
    while (body.size() > 1 && body.back() == '0') body.pop_back();
    return "0." + std::string(z, '0') + body;
}

std::vector<BoundsRow> ratio_table(unsigned max_k) {
    std::vector<BoundsRow> rows;
    rows.reserve(max_k + 1);
    for (unsigned k = 0; k <= max_k; ++k) {
        BoundsRow row;
        row.k = k;
        row.omitted = omission_count(k, max_k);
        const BigCount total = pow2(std::uint64_t(1) << k);
        row.matched = total - row.omitted;
        row.omission_bound = omission_bound_coarse(k);
        row.omission_bound_holds = row.omitted <= row.omission_bound;
        row.refined_bound_holds = check_omission_bound_refined(k);
        row.match_floor_holds = check_match_floor(k);
        row.step_bound_holds = k == 0 || check_omission_step_scaled(k - 1);
        row.omitted_ratio = decimal_ratio(row.omitted, total);
        row.matched_ratio = decimal_ratio(row.matched, total);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

} // namespace

std::string bounds_table_csv(const std::vector<BoundsRow>& rows) {
    std::string out =
        "k,omitted,matched,omission_bound,omission_bound_holds,"
        "refined_bound_holds,match_floor_holds,step_bound_holds,"
        "omitted_ratio,matched_ratio\n";
    for (const BoundsRow& r : rows) {
        out += std::to_string(r.k) + ',' + r.omitted.get_str() + ',' +
               r.matched.get_str() + ',' + r.omission_bound.get_str() + ',' +
               bool_str(r.omission_bound_holds) + ',' +
               bool_str(r.refined_bound_holds) + ',' +
               bool_str(r.match_floor_holds) + ',' + bool_str(r.step_bound_holds) +
               ',' + r.omitted_ratio + ',' + r.matched_ratio + '\n';
    }
    return out;
}

std::string bounds_table_json(const std::vector<BoundsRow>& rows) {
    // Counts are serialized as strings: they outgrow double-precision JSON
    // numbers almost immediately.
    std::string out = "[";
    bool first = true;
    for (const BoundsRow& r : rows) {
        if (!first) out += ',';
        out += std::string("{\"k\":") + std::to_string(r.k) + ",\"omitted\":\"" +
               r.omitted.get_str() + "\",\"matched\":\"" + r.matched.get_str() +
               "\",\"omission_bound\":\"" + r.omission_bound.get_str() +
               "\",\"omission_bound_holds\":" + bool_str(r.omission_bound_holds) +
               ",\"refined_bound_holds\":" + bool_str(r.refined_bound_holds) +
               ",\"match_floor_holds\":" + bool_str(r.match_floor_holds) +
               ",\"step_bound_holds\":" + bool_str(r.step_bound_holds) +
               ",\"omitted_ratio\":\"" + r.omitted_ratio +
               "\",\"matched_ratio\":\"" + r.matched_ratio + "\"}";
        first = false;
    }
    out += "]";
    return out;
}

} // namespace tmlcs
