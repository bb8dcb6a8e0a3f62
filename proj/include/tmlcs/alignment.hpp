#pragma once

#include "tmlcs/bitword.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace tmlcs {

/// A maximal diagonal run of matches: positions (x + r, y + r) for
/// 0 <= r < len.
struct AlignmentRun {
    std::uint64_t x;
    std::uint64_t y;
    std::uint64_t len;

    friend bool operator==(const AlignmentRun&, const AlignmentRun&) = default;
};

/// A common subsequence of two words X and Y as an explicit matching of
/// positions, strictly increasing in both coordinates. Stored run-length
/// encoded; runs that continue the previous diagonal are merged on insert,
/// so the stored form is canonical.
class Alignment {
public:
    Alignment() = default;

    /// Adds a run; merges with the tail run when exactly diagonal-adjacent.
    /// Runs must arrive in increasing coordinate order (checked by verify,
    /// not here). Zero-length runs are ignored.
    void push_run(std::uint64_t x, std::uint64_t y, std::uint64_t len);

    void push_pair(std::uint64_t x, std::uint64_t y) { push_run(x, y, 1); }

    /// Total number of matched positions.
    std::uint64_t match_count() const { return total_; }

    const std::vector<AlignmentRun>& runs() const { return runs_; }

    bool empty() const { return runs_.empty(); }

    /// Expanded (i, j) pairs, in order.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs() const;

    friend bool operator==(const Alignment&, const Alignment&) = default;

private:
    std::vector<AlignmentRun> runs_;
    std::uint64_t total_ = 0;
};

/// Read-only view of a binary word for verification. Lets the verifier
/// stream symbols from a formula instead of a materialized word.
struct BitSource {
    std::uint64_t length = 0;
    std::function<bool(std::uint64_t)> at;

    /// View over a materialized word. The word must outlive the source.
    static BitSource from_word(const BitWord& w);

    /// The length-n prefix of the Thue-Morse sequence, symbols computed on
    /// demand; no materialization, so n may exceed any cap.
    static BitSource thue_morse(std::uint64_t n);

    /// Bitwise complement of the above.
    static BitSource thue_morse_complement(std::uint64_t n);
};

/// Checks that `a` is a valid common-subsequence matching of (x, y): all
/// indices in range, strictly increasing in both coordinates, equal symbols
/// at every pair. Returns false and, when `diagnostic` is non-null, a
/// description of the first violated condition. Never throws.
bool verify(const Alignment& a, const BitSource& x, const BitSource& y,
            std::string* diagnostic = nullptr);

bool verify(const Alignment& a, const BitWord& x, const BitWord& y,
            std::string* diagnostic = nullptr);

/// Translates every pair by (dx, dy). Throws std::out_of_range if any
/// index would leave [0, 2^64).
Alignment shift(const Alignment& a, std::int64_t dx, std::int64_t dy);

/// Concatenates parts that occupy disjoint, increasing coordinate ranges
/// in both words. Throws std::invalid_argument when ranges interleave.
Alignment concat(const std::vector<Alignment>& parts);

enum class Side { X, Y };

/// The subsequence selected by the alignment, read from `w` along the
/// chosen coordinate. For a valid alignment both sides spell the same
/// string; that is what makes it a common subsequence.
BitWord matched_string(const Alignment& a, const BitWord& w, Side side = Side::X);

/// Reinterprets `a` as an alignment of the complemented words. Index pairs
/// are unchanged: complementing both words preserves per-position equality,
/// so an alignment of (w, v) is also one of (~w, ~v). Used to reuse a
/// construction built for (word, complement) on the swapped pair.
Alignment complement_alignment(const Alignment& a);

/// JSON document form: {"x_len": .., "y_len": .., "runs": [[x, y, len], ..]}.
struct AlignmentDoc {
    std::uint64_t x_len = 0;
    std::uint64_t y_len = 0;
    Alignment alignment;
};

std::string to_json(const AlignmentDoc& doc);

/// Parses the document form. Throws std::invalid_argument on malformed
/// input (wrong types, negative values, missing keys).
AlignmentDoc alignment_doc_from_json(const std::string& text);

} // namespace tmlcs
