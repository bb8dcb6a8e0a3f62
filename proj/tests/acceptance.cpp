// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failed criteria. Each criterion recomputes what it needs from scratch so
// the lines are independently meaningful; criteria with a pinned time
// budget fail when they exceed it.

#include "tmlcs/alignment.hpp"
#include "tmlcs/analysis.hpp"
#include "tmlcs/construction.hpp"
#include "tmlcs/lcs.hpp"
#include "tmlcs/oeis.hpp"
#include "tmlcs/tm.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace tmlcs;

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

// --- criterion 1 ---------------------------------------------------------

Outcome first_oracle_values() {
    const std::uint64_t word_expect[] = {1, 2, 5, 12, 26, 54};
    const std::uint64_t prefix_expect[] = {0, 1, 1, 2, 3, 4};
    for (unsigned n = 1; n <= 6; ++n) {
        const std::uint64_t a = word_lcs(n).length;
        if (a != word_expect[n - 1])
            return fail("word LCS at n = " + std::to_string(n) + " is " +
                        std::to_string(a) + ", expected " +
                        std::to_string(word_expect[n - 1]));
        const std::uint64_t b = prefix_lcs(n).length;
        if (b != prefix_expect[n - 1])
            return fail("prefix LCS at n = " + std::to_string(n) + " is " +
                        std::to_string(b) + ", expected " +
                        std::to_string(prefix_expect[n - 1]));
    }
    return {};
}

// --- criterion 2 ---------------------------------------------------------

Outcome omission_recurrence_values() {
    const char* expected[] = {"1",    "2",        "6",
                              "46",   "4166",     "91071806",
                              "130383480383828886"};
    for (unsigned k = 0; k <= 6; ++k) {
        const std::string got = omission_count(k).get_str();
        if (got != expected[k])
            return fail("omission count at level " + std::to_string(k) +
                        " is " + got + ", expected " + expected[k]);
    }
    return {};
}

// --- criterion 3 ---------------------------------------------------------

Outcome constructions_verify() {
    for (unsigned k = 0; k <= 4; ++k) {
        const ConstructionResult r = construct_pow2(k);
        const BigCount expect =
            pow2(std::uint64_t(1) << k) - omission_count(k);
        if (r.matched != expect || !r.alignment ||
            BigCount(r.alignment->match_count()) != r.matched)
            return fail("level " + std::to_string(k) +
                        " length mismatch: got " + r.matched.get_str() +
                        ", expected " + expect.get_str());
        std::string diag;
        if (!verify(*r.alignment, tm_word(1u << k, 0), tm_word(1u << k, 1),
                    &diag))
            return fail("level " + std::to_string(k) +
                        " failed verification: " + diag);
    }
    if (construct_pow2(2).matched != 10 || construct_pow2(4).matched != 61370)
        return fail("frozen lengths at levels 2 and 4 do not match 10/61370");
    return {};
}

// --- criterion 4 ---------------------------------------------------------

Outcome prefix_word_agreement() {
    for (unsigned n = 0; n <= 12; ++n) {
        const std::uint64_t a = word_lcs(n, LcsAlgorithm::BitParallel).length;
        const std::uint64_t b =
            prefix_lcs(std::uint64_t(1) << n, LcsAlgorithm::BitParallel).length;
        if (a != b)
            return fail("prefix LCS at length 2^" + std::to_string(n) +
                        " is " + std::to_string(b) + " but the word LCS is " +
                        std::to_string(a));
    }
    return {};
}

// --- criterion 5 ---------------------------------------------------------

Outcome construction_is_lower_bound() {
    for (unsigned n = 0; n <= 14; ++n) {
        const BigCount built = construction_length_word(n);
        const std::uint64_t exact = word_lcs(n).length;
        if (built > exact)
            return fail("word construction at n = " + std::to_string(n) +
                        " claims " + built.get_str() +
                        " matches, above the exact LCS " +
                        std::to_string(exact));
    }
    for (std::uint64_t n = 1; n <= 4096; ++n) {
        const BigCount built = construction_length_prefix(n);
        const std::uint64_t exact = prefix_lcs(n).length;
        if (built > exact)
            return fail("prefix construction at n = " + std::to_string(n) +
                        " claims " + built.get_str() +
                        " matches, above the exact LCS " +
                        std::to_string(exact));
    }
    return {};
}

// --- criterion 6 ---------------------------------------------------------

Outcome bound_suite() {
    for (unsigned k = 0; k <= 12; ++k)
        if (!check_omission_step(k))
            return fail("one-step omission bound fails at k = " +
                        std::to_string(k));
    for (unsigned k = 0; k <= 12; ++k)
        if (!check_omission_bound_coarse(k))
            return fail("coarse omission bound fails at k = " +
                        std::to_string(k));
    for (unsigned k = 1; k <= 20; ++k)
        if (!check_match_floor(k))
            return fail("match floor fails at k = " + std::to_string(k));
    for (unsigned k = 1; k <= 12; ++k)
        if (!check_omission_step_scaled(k))
            return fail("scaled one-step bound fails at k = " +
                        std::to_string(k));
    for (unsigned k = 0; k <= 12; ++k)
        if (!check_omission_bound_refined(k))
            return fail("refined omission bound fails at k = " +
                        std::to_string(k));
    for (unsigned s = 1; s <= 60; ++s)
        if (!check_geometric_sum_bound(s))
            return fail("geometric sum bound fails at s = " +
                        std::to_string(s));
    for (unsigned n = 1; n <= 64; ++n)
        if (!check_word_floor(n))
            return fail("word-length floor fails at n = " + std::to_string(n));
    for (std::uint64_t n = 1; n <= (std::uint64_t(1) << 16); ++n)
        if (!check_prefix_floor(n))
            return fail("prefix-length floor fails at n = " +
                        std::to_string(n));
    return {};
}

// --- criterion 7 ---------------------------------------------------------

Outcome digit_identities() {
    std::uint64_t running = 0;
    unsigned n = 1;
    for (std::uint64_t i = 0; n <= 20; ++i) {
        if (i == (std::uint64_t(1) << n) - 1) {
            if (count_adjacent_equal(n) != running)
                return fail("adjacent-equal closed form at n = " +
                            std::to_string(n) + " is " +
                            count_adjacent_equal(n).get_str() +
                            ", brute force counts " + std::to_string(running));
            ++n;
        }
        if (tm_digit(i) == tm_digit(i + 1)) ++running;
    }
    for (std::uint64_t i = 0; i < (std::uint64_t(1) << 16); ++i)
        if (ends_in_odd_ones(i) != (tm_digit(i) == tm_digit(i + 1)))
            return fail("trailing-ones parity predicate disagrees with the "
                        "digit comparison at i = " +
                        std::to_string(i));
    return {};
}

// --- criterion 8 ---------------------------------------------------------

Outcome check_three_way(const BitWord& x, const BitWord& y,
                        const std::string& label, Outcome& out) {
    const std::uint64_t quad = lcs(x, y, LcsAlgorithm::QuadraticDp).length;
    const std::uint64_t bitp = lcs(x, y, LcsAlgorithm::BitParallel).length;
    const LcsResult rec = lcs(x, y, LcsAlgorithm::LinearSpace);
    if (quad != bitp || quad != rec.length) {
        out = fail(label + ": lengths disagree (quadratic " +
                   std::to_string(quad) + ", bit-parallel " +
                   std::to_string(bitp) + ", linear-space " +
                   std::to_string(rec.length) + ")");
        return out;
    }
    std::string diag;
    if (!rec.alignment || rec.alignment->match_count() != quad ||
        !verify(*rec.alignment, x, y, &diag)) {
        out = fail(label + ": recovered alignment invalid: " + diag);
        return out;
    }
    return out;
}

Outcome algorithm_agreement() {
    Outcome out;
    std::mt19937_64 eng(0x414343ull); // fixed seed: reproducible corpus
    const auto random_word = [&eng]() {
        const std::uint64_t len = eng() % 513;
        std::string bits(len, '0');
        for (auto& c : bits) c = (eng() & 1) ? '1' : '0';
        return BitWord::from_ascii(bits);
    };
    for (int trial = 0; trial < 1000; ++trial) {
        const BitWord x = random_word();
        const BitWord y = random_word();
        check_three_way(x, y, "random pair " + std::to_string(trial), out);
        if (!out.pass) return out;
    }
    for (unsigned n = 0; n <= 14; ++n) {
        const BitWord x = tm_word(n, 0);
        check_three_way(x, x.complemented(),
                        "word pair n = " + std::to_string(n), out);
        if (!out.pass) return out;
    }
    return out;
}

// --- criterion 9 ---------------------------------------------------------

Outcome matched_fraction_growth() {
    Outcome out;
    for (unsigned k = 0; k <= 10; ++k) {
        if (match_ratio_increases(k)) continue;
        const BigCount lo = pow2(std::uint64_t(1) << k) - omission_count(k);
        const BigCount hi =
            pow2(std::uint64_t(1) << (k + 1)) - omission_count(k + 1);
        out.pass = false;
        if (!out.detail.empty()) out.detail += "; ";
        out.detail += "matched fraction does not strictly increase from "
                      "level " +
                      std::to_string(k) + " to " + std::to_string(k + 1) +
                      ": " + hi.get_str() + "/2^" +
                      std::to_string(std::uint64_t(1) << (k + 1)) +
                      " is not greater than " + lo.get_str() + "/2^" +
                      std::to_string(std::uint64_t(1) << k);
        if (hi == lo * pow2(std::uint64_t(1) << k))
            out.detail += " (the two fractions are exactly equal)";
    }
    for (unsigned k = 1; k <= 10; ++k) {
        if (check_match_ratio_refined_floor(k)) continue;
        out.pass = false;
        if (!out.detail.empty()) out.detail += "; ";
        out.detail +=
            "matched fraction at level " + std::to_string(k) +
            " does not exceed 1 - 8/3^" + std::to_string(k);
    }
    return out;
}

// --- criterion 10 --------------------------------------------------------

bool parse_bfile(const std::string& text, std::uint64_t expected_count,
                 std::vector<std::uint64_t>& values, std::string& why) {
    values.clear();
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) {
            why = "last line is not newline-terminated";
            return false;
        }
        const std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        const std::size_t space = line.find(' ');
        if (space == std::string::npos || space == 0 ||
            space + 1 >= line.size()) {
            why = "line '" + line + "' is not an index/value pair";
            return false;
        }
        const std::string index_part = line.substr(0, space);
        const std::string value_part = line.substr(space + 1);
        for (const std::string& part : {index_part, value_part})
            for (const char c : part)
                if (c < '0' || c > '9') {
                    why = "non-digit in line '" + line + "'";
                    return false;
                }
        if (std::stoull(index_part) != values.size() + 1) {
            why = "indices are not consecutive from 1 at line '" + line + "'";
            return false;
        }
        values.push_back(std::stoull(value_part));
    }
    if (values.size() != expected_count) {
        why = "expected " + std::to_string(expected_count) + " lines, found " +
              std::to_string(values.size());
        return false;
    }
    return true;
}

Outcome bfile_export() {
    const Bfile word_file = oeis_bfile(OeisSequence::A297618, 14);
    const Bfile prefix_file = oeis_bfile(OeisSequence::A320847, 4096);
    if (word_file.stopped_early || prefix_file.stopped_early)
        return fail("export stopped before the requested range");

    std::vector<std::uint64_t> a, b;
    std::string why;
    if (!parse_bfile(word_file.text, 14, a, why))
        return fail("A297618 b-file malformed: " + why);
    if (!parse_bfile(prefix_file.text, 4096, b, why))
        return fail("A320847 b-file malformed: " + why);

    const std::uint64_t word_expect[] = {1, 2, 5, 12, 26, 54};
    const std::uint64_t prefix_expect[] = {0, 1, 1, 2, 3, 4};
    for (unsigned n = 1; n <= 6; ++n) {
        if (a[n - 1] != word_expect[n - 1])
            return fail("A297618 value at n = " + std::to_string(n) +
                        " disagrees with the oracle");
        if (b[n - 1] != prefix_expect[n - 1])
            return fail("A320847 value at n = " + std::to_string(n) +
                        " disagrees with the oracle");
    }
    for (unsigned n = 1; n <= 12; ++n)
        if (b[(std::size_t(1) << n) - 1] != a[n - 1])
            return fail("A320847 at index 2^" + std::to_string(n) +
                        " does not equal A297618 at index " +
                        std::to_string(n));
    return {};
}

// --- driver ---------------------------------------------------------------

struct Criterion {
    const char* description;
    double limit_seconds; // 0 = no pinned budget
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"exact oracle reproduces the first six word and prefix LCS values", 1.0,
     first_oracle_values},
    {"omission recurrence reproduces the frozen counts for levels 0..6", 1.0,
     omission_recurrence_values},
    {"materialized constructions for levels 0..4 verify with the predicted "
     "lengths",
     5.0, constructions_verify},
    {"prefix LCS at powers of two equals the word LCS for n = 0..12", 10.0,
     prefix_word_agreement},
    {"construction lengths never exceed the exact LCS (words n <= 14, "
     "prefixes n <= 4096)",
     0.0, construction_is_lower_bound},
    {"exact-arithmetic bound suite holds across its stated ranges", 0.0,
     bound_suite},
    {"adjacent-equal closed form and trailing-ones predicate match brute "
     "force",
     0.0, digit_identities},
    {"three LCS algorithms agree on random and Thue-Morse pairs with "
     "verified alignments",
     0.0, algorithm_agreement},
    {"matched fraction strictly increases for levels 0..10 and exceeds "
     "1 - 8/3^k for k = 1..10",
     0.0, matched_fraction_growth},
    {"OEIS b-files (A297618 to 14, A320847 to 4096) are well-formed and "
     "consistent",
     300.0, bfile_export},
};

} // namespace

int main() {
    int failures = 0;
    for (std::size_t i = 0; i < std::size(kCriteria); ++i) {
        const Criterion& c = kCriteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome = c.run();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (outcome.pass && c.limit_seconds > 0 &&
            seconds > c.limit_seconds) {
            outcome.pass = false;
            char buf[64];
            std::snprintf(buf, sizeof buf, "finished in %.2f s, over the %.0f s limit",
                          seconds, c.limit_seconds);
            outcome.detail = buf;
        }
        char time_buf[32];
        std::snprintf(time_buf, sizeof time_buf, "%.2f", seconds);
        std::string line = outcome.pass ? "PASS" : "FAIL";
        line += " criterion " + std::to_string(i + 1) + ": " + c.description;
        if (!outcome.detail.empty()) line += ": " + outcome.detail;
        line += " (" + std::string(time_buf) + " s)";
        std::puts(line.c_str());
        if (!outcome.pass) ++failures;
    }
    std::printf("%d of %zu criteria passed\n",
                int(std::size(kCriteria)) - failures, std::size(kCriteria));
    return failures;
}
