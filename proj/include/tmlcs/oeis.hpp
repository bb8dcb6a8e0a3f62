#pragma once

#include "tmlcs/lcs.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace tmlcs {

/// The two sequences this project can regenerate from its LCS oracle:
///  - A297618: LCS length of the exponent-n morphism word and its
///    complement.
///  - A320847: LCS length of the length-n Thue-Morse prefix and its
///    complement.
enum class OeisSequence { A297618, A320847 };

/// Parses "A297618" / "A320847" (case-sensitive). Throws
/// std::invalid_argument otherwise.
OeisSequence oeis_sequence_from_name(const std::string& name);

struct Bfile {
    /// OEIS b-file body: one "index value\n" line per term, 1-indexed,
    /// no header.
    std::string text;
    std::uint64_t last_index = 0; ///< last index actually emitted
    bool stopped_early = false;   ///< true when the budget cut the range
};

/// Computes terms 1..max_n with the bit-parallel oracle, stopping at the
/// last index whose cost fits the budget; `stopped_early` reports a cut.
Bfile oeis_bfile(OeisSequence seq, std::uint64_t max_n,
                 std::optional<std::uint64_t> budget_override = std::nullopt);

} // namespace tmlcs
