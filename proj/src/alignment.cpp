#include "tmlcs/alignment.hpp"

#include "tmlcs/tm.hpp"

#include <json.hpp>

#include <stdexcept>

namespace tmlcs {

void Alignment::push_run(std::uint64_t x, std::uint64_t y, std::uint64_t len) {
    if (len == 0) return;
    if (!runs_.empty()) {
        AlignmentRun& tail = runs_.back();
        if (tail.x + tail.len == x && tail.y + tail.len == y) {
            tail.len += len;
            total_ += len;
            return;
        }
    }
    runs_.push_back({x, y, len});
    total_ += len;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> Alignment::pairs() const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(total_);
    for (const AlignmentRun& r : runs_)
        for (std::uint64_t i = 0; i < r.len; ++i) out.emplace_back(r.x + i, r.y + i);
    return out;
}

BitSource BitSource::from_word(const BitWord& w) {
    return {w.size(), [&w](std::uint64_t i) { return w.bit(i); }};
}

BitSource BitSource::thue_morse(std::uint64_t n) {
    return {n, [](std::uint64_t i) { return tm_digit(i) != 0; }};
}

BitSource BitSource::thue_morse_complement(std::uint64_t n) {
    return {n, [](std::uint64_t i) { return tm_digit(i) == 0; }};
}

namespace {

void set_diag(std::string* diagnostic, const std::string& message) {
    if (diagnostic) *diagnostic = message;
}

} // namespace

bool verify(const Alignment& a, const BitSource& x, const BitSource& y,
            std::string* diagnostic) {
    std::uint64_t next_x = 0; // smallest x index the next run may use
    std::uint64_t next_y = 0;
    bool first = true;
    for (std::size_t r = 0; r < a.runs().size(); ++r) {
        const AlignmentRun& run = a.runs()[r];
        if (run.len == 0) {
            set_diag(diagnostic, "run " + std::to_string(r) + ": empty run");
            return false;
        }
        if (!first && (run.x < next_x || run.y < next_y)) {
            set_diag(diagnostic,
                     "run " + std::to_string(r) +
                         ": not strictly increasing (starts at (" +
                         std::to_string(run.x) + ", " + std::to_string(run.y) +
                         "), previous run ended at (" + std::to_string(next_x - 1) +
                         ", " + std::to_string(next_y - 1) + "))");
            return false;
        }
        if (run.len > x.length || run.x > x.length - run.len) {
            set_diag(diagnostic, "run " + std::to_string(r) + ": x range [" +
                                     std::to_string(run.x) + ", +" +
                                     std::to_string(run.len) +
                                     ") out of range for x length " +
                                     std::to_string(x.length));
            return false;
        }
        if (run.len > y.length || run.y > y.length - run.len) {
            set_diag(diagnostic, "run " + std::to_string(r) + ": y range [" +
                                     std::to_string(run.y) + ", +" +
                                     std::to_string(run.len) +
                                     ") out of range for y length " +
                                     std::to_string(y.length));
            return false;
        }
        for (std::uint64_t i = 0; i < run.len; ++i) {
            const bool xs = x.at(run.x + i);
            const bool ys = y.at(run.y + i);
            if (xs != ys) {
                set_diag(diagnostic,
                         "pair (" + std::to_string(run.x + i) + ", " +
                             std::to_string(run.y + i) + "): symbol mismatch x=" +
                             (xs ? "1" : "0") + " y=" + (ys ? "1" : "0"));
                return false;
            }
        }
        next_x = run.x + run.len;
        next_y = run.y + run.len;
        first = false;
    }
    return true;
}

bool verify(const Alignment& a, const BitWord& x, const BitWord& y,
            std::string* diagnostic) {
    return verify(a, BitSource::from_word(x), BitSource::from_word(y), diagnostic);
}

Alignment shift(const Alignment& a, std::int64_t dx, std::int64_t dy) {
    Alignment out;
    for (const AlignmentRun& r : a.runs()) {
        std::uint64_t x = r.x;
        std::uint64_t y = r.y;
        if ((dx < 0 && x < std::uint64_t(-dx)) || (dy < 0 && y < std::uint64_t(-dy)))
            throw std::out_of_range("shift by (" + std::to_string(dx) + ", " +
                                    std::to_string(dy) +
                                    ") would move an index below zero");
        x += std::uint64_t(dx);
        y += std::uint64_t(dy);
        out.push_run(x, y, r.len);
    }
    return out;
}

Alignment concat(const std::vector<Alignment>& parts) {
    Alignment out;
    std::uint64_t next_x = 0;
    std::uint64_t next_y = 0;
    bool first = true;
    for (const Alignment& part : parts) {
        if (part.empty()) continue;
        const AlignmentRun& head = part.runs().front();
        if (!first && (head.x < next_x || head.y < next_y))
            throw std::invalid_argument(
                "alignment parts interleave: part starting at (" +
                std::to_string(head.x) + ", " + std::to_string(head.y) +
                ") overlaps the previous part ending at (" +
                std::to_string(next_x - 1) + ", " + std::to_string(next_y - 1) + ")");
        for (const AlignmentRun& r : part.runs()) out.push_run(r.x, r.y, r.len);
        const AlignmentRun& tail = part.runs().back();
        next_x = tail.x + tail.len;
        next_y = tail.y + tail.len;
        first = false;
    }
    return out;
}

BitWord matched_string(const Alignment& a, const BitWord& w, Side side) {
    BitWord out(a.match_count());
    std::uint64_t pos = 0;
    for (const AlignmentRun& r : a.runs()) {
        const std::uint64_t start = side == Side::X ? r.x : r.y;
        for (std::uint64_t i = 0; i < r.len; ++i)
            out.set_bit(pos++, w.bit(start + i));
    }
    return out;
}

Alignment complement_alignment(const Alignment& a) {
    // Complementing both words flips every symbol on both sides of each
    // pair, so per-position equality — and with it validity — is
    // preserved with the very same index pairs.
    return a;
}

std::string to_json(const AlignmentDoc& doc) {
    std::string out = "{\"x_len\":" + std::to_string(doc.x_len) +
                      ",\"y_len\":" + std::to_string(doc.y_len) + ",\"runs\":[";
    bool first = true;
    for (const AlignmentRun& r : doc.alignment.runs()) {
        if (!first) out += ',';
        out += '[' + std::to_string(r.x) + ',' + std::to_string(r.y) + ',' +
               std::to_string(r.len) + ']';
        first = false;
    }
    out += "]}";
    return out;
}

namespace {

std::uint64_t require_u64(const nlohmann::json& v, const char* what) {
    if (!v.is_number_unsigned())
        throw std::invalid_argument(std::string(what) +
                                    " must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

} // namespace

AlignmentDoc alignment_doc_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed alignment JSON: ") +
                                    e.what());
    }
    if (!j.is_object() || !j.contains("x_len") || !j.contains("y_len") ||
        !j.contains("runs"))
        throw std::invalid_argument(
            "alignment JSON must be an object with x_len, y_len, and runs");
    AlignmentDoc doc;
    doc.x_len = require_u64(j["x_len"], "x_len");
    doc.y_len = require_u64(j["y_len"], "y_len");
    if (!j["runs"].is_array())
        throw std::invalid_argument("runs must be an array");
    for (const auto& entry : j["runs"]) {
        if (!entry.is_array() || entry.size() != 3)
            throw std::invalid_argument("each run must be a [x, y, len] triple");
        const std::uint64_t x = require_u64(entry[0], "run x");
        const std::uint64_t y = require_u64(entry[1], "run y");
        const std::uint64_t len = require_u64(entry[2], "run len");
        if (len == 0) throw std::invalid_argument("run len must be positive");
        doc.alignment.push_run(x, y, len);
    }
    return doc;
}

} // namespace tmlcs
