#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace tmlcs {

/// Arbitrary-precision nonnegative count. All recurrence values and bound
/// comparisons are carried out exactly in this type; no floating point.
using BigCount = mpz_class;

/// Exact rational, used for the harmonic-style sum inequality.
using BigRational = mpq_class;

/// 2^e as a BigCount.
inline BigCount pow2(std::uint64_t e) {
    BigCount r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

/// base^e as a BigCount.
inline BigCount powi(unsigned long base, unsigned long e) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

} // namespace tmlcs
