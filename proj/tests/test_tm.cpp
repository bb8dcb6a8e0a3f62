#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tmlcs/errors.hpp"
#include "tmlcs/tm.hpp"

#include <stdexcept>
#include <string>

using namespace tmlcs;

TEST_CASE("bitword ascii round trip") {
    for (const std::string& s : {std::string(), std::string("0"),
                                 std::string("1"), std::string("0110"),
                                 std::string("1001011001101001"),
                                 std::string(130, '1')}) {
        const BitWord w = BitWord::from_ascii(s);
        CHECK(w.size() == s.size());
        CHECK(w.to_ascii() == s);
    }
    CHECK_THROWS_AS(BitWord::from_ascii("01x0"), std::invalid_argument);
}

TEST_CASE("bitword indexing and bounds") {
    const BitWord w = BitWord::from_ascii("0110");
    CHECK_FALSE(w.bit(0));
    CHECK(w.bit(1));
    CHECK(w.bit(2));
    CHECK_FALSE(w.bit(3));
    CHECK_THROWS_AS(w.bit(4), std::out_of_range);
    CHECK_THROWS_AS(BitWord{}.bit(0), std::out_of_range);
}

TEST_CASE("bitword operations across limb boundaries") {
    for (const std::uint64_t len : {63u, 64u, 65u, 127u, 128u, 129u}) {
        std::string s;
        for (std::uint64_t i = 0; i < len; ++i) s += (i % 3 == 0) ? '1' : '0';
        const BitWord w = BitWord::from_ascii(s);

        std::string rev(s.rbegin(), s.rend());
        CHECK(w.reversed().to_ascii() == rev);

        std::string comp = s;
        for (char& c : comp) c = c == '0' ? '1' : '0';
        CHECK(w.complemented().to_ascii() == comp);
        CHECK(w.complemented().complemented() == w);

        CHECK(w.subword(1, len - 2).to_ascii() == s.substr(1, len - 2));
        CHECK(w.subword(len, 0).empty());

        BitWord cat = w;
        cat.append(w);
        CHECK(cat.to_ascii() == s + s);
    }
    CHECK_THROWS_AS(BitWord::from_ascii("01").subword(1, 2), std::out_of_range);
}

TEST_CASE("morphism on single symbols and words") {
    CHECK(morphism_apply(BitWord::from_ascii("0")).to_ascii() == "01");
    CHECK(morphism_apply(BitWord::from_ascii("1")).to_ascii() == "10");
    CHECK(morphism_apply(BitWord{}).empty());
    CHECK(morphism_apply(BitWord::from_ascii("01")).to_ascii() == "0110");
}

TEST_CASE("thue-morse words") {
    CHECK(tm_word(0, 0).to_ascii() == "0");
    CHECK(tm_word(0, 1).to_ascii() == "1");
    CHECK(tm_word(3, 0).to_ascii() == "01101001");
    CHECK(tm_word(4, 0).to_ascii() == "0110100110010110");
}

TEST_CASE("word lengths double under the morphism") {
    for (unsigned n = 0; n <= 12; ++n) {
        CHECK(tm_word(n, 0).size() == (std::uint64_t(1) << n));
        CHECK(tm_word(n, 1).size() == (std::uint64_t(1) << n));
    }
}

TEST_CASE("iterating the morphism reproduces deeper words") {
    for (unsigned n = 0; n <= 12; ++n) {
        BitWord w = tm_word(n, 0);
        for (unsigned m = 1; n + m <= 12; ++m) {
            w = morphism_apply(w);
            CHECK(w == tm_word(n + m, 0));
        }
    }
}

TEST_CASE("each word is the previous word plus its complement") {
    for (unsigned n = 0; n <= 11; ++n) {
        BitWord zero = tm_word(n, 0);
        zero.append(tm_word(n, 1));
        CHECK(zero == tm_word(n + 1, 0));

        BitWord one = tm_word(n, 1);
        one.append(tm_word(n, 0));
        CHECK(one == tm_word(n + 1, 1));
    }
}

TEST_CASE("complement is an involution and flips the generator digit") {
    CHECK(BitWord::from_ascii("01101001").complemented().to_ascii() == "10010110");
    CHECK(BitWord{}.complemented().empty());
    for (unsigned n = 0; n <= 12; ++n)
        CHECK(tm_word(n, 0).complemented() == tm_word(n, 1));
}

TEST_CASE("digit formula agrees with materialized words") {
    CHECK(tm_digit(0) == 0);
    CHECK(tm_digit(5) == 0);
    const BitWord w = tm_word(12, 0);
    for (std::uint64_t i = 0; i < w.size(); ++i)
        CHECK(int(w.bit(i)) == tm_digit(i));
}

TEST_CASE("digit recurrences") {
    for (std::uint64_t n = 0; n < (1u << 16); ++n) {
        CHECK(tm_digit(2 * n) == tm_digit(n));
        CHECK(tm_digit(2 * n + 1) == 1 - tm_digit(n));
    }
}

TEST_CASE("even digits of the word equal odd digits of the complement") {
    for (unsigned n = 1; n <= 12; ++n) {
        const BitWord zero = tm_word(n, 0);
        const BitWord one = tm_word(n, 1);
        for (std::uint64_t i = 0; i < (std::uint64_t(1) << (n - 1)); ++i)
            CHECK(zero.bit(2 * i) == one.bit(2 * i + 1));
    }
}

TEST_CASE("prefixes") {
    CHECK(tm_prefix(0).empty());
    CHECK(tm_prefix(6).to_ascii() == "011010");
    CHECK(tm_prefix(8).to_ascii() == "01101001");
    for (unsigned k = 0; k <= 12; ++k)
        CHECK(tm_prefix(std::uint64_t(1) << k) == tm_word(k, 0));
}

TEST_CASE("materialization cap") {
    CHECK_THROWS_AS(tm_word(25, 0), CapExceeded);
    CHECK_THROWS_AS(tm_word(10, 0, 512), CapExceeded);
    CHECK_THROWS_AS(tm_prefix(kDefaultMaterializeCap + 1), CapExceeded);
    CHECK(tm_word(9, 0, 512).size() == 512);
}

TEST_CASE("odd-length trailing one-run predicate") {
    CHECK(ends_in_odd_ones(1));
    CHECK_FALSE(ends_in_odd_ones(0));
    for (std::uint64_t n = 0; n < (1u << 16); ++n)
        CHECK(ends_in_odd_ones(n) == (tm_digit(n) == tm_digit(n + 1)));
}

TEST_CASE("adjacent-equal count closed form matches a direct scan") {
    CHECK(count_adjacent_equal(2) == 1);
    CHECK(count_adjacent_equal(3) == 2);
    CHECK_THROWS_AS(count_adjacent_equal(0), std::invalid_argument);

    std::uint64_t count = 0;
    std::uint64_t i = 0;
    for (unsigned n = 1; n <= 20; ++n) {
        const std::uint64_t limit = (std::uint64_t(1) << n) - 1;
        for (; i < limit; ++i)
            if (tm_digit(i) == tm_digit(i + 1)) ++count;
        CHECK(count_adjacent_equal(n) == count);
    }
}

TEST_CASE("prefix decomposition follows the set bits of the length") {
    const BlockDecomposition six = decompose_prefix(6);
    REQUIRE(six.blocks.size() == 2);
    CHECK(six.blocks[0] == Block{2, 0, 0});
    CHECK(six.blocks[1] == Block{1, 4, 1});
    CHECK(six.total_length == 6);

    const BlockDecomposition one = decompose_prefix(1);
    REQUIRE(one.blocks.size() == 1);
    CHECK(one.blocks[0] == Block{0, 0, 0});

    const BlockDecomposition eight = decompose_prefix(8);
    REQUIRE(eight.blocks.size() == 1);
    CHECK(eight.blocks[0] == Block{3, 0, 0});

    CHECK_THROWS_AS(decompose_prefix(0), std::invalid_argument);
}

TEST_CASE("decomposition invariants and round trip") {
    for (std::uint64_t n = 1; n <= (1u << 16); ++n) {
        const BlockDecomposition d = decompose_prefix(n);
        std::uint64_t expect_start = 0;
        unsigned prev_exponent = 64;
        for (const Block& b : d.blocks) {
            CHECK(b.start == expect_start);
            CHECK(b.exponent < prev_exponent);
            prev_exponent = b.exponent;
            expect_start += std::uint64_t(1) << b.exponent;
        }
        CHECK(expect_start == n);
        CHECK(render_decomposition(d) == tm_prefix(n));
    }
}
