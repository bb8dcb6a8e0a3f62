#include "tmlcs/oeis.hpp"

#include "tmlcs/errors.hpp"

#include <stdexcept>

namespace tmlcs {

OeisSequence oeis_sequence_from_name(const std::string& name) {
    if (name == "A297618") return OeisSequence::A297618;
    if (name == "A320847") return OeisSequence::A320847;
    throw std::invalid_argument("unknown sequence '" + name +
                                "' (expected A297618 or A320847)");
}

Bfile oeis_bfile(OeisSequence seq, std::uint64_t max_n,
                 std::optional<std::uint64_t> budget_override) {
    Bfile out;
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        std::uint64_t value;
        try {
            value = seq == OeisSequence::A297618
                        ? word_lcs(unsigned(n), LcsAlgorithm::BitParallel,
                                   budget_override)
                              .length
                        : prefix_lcs(n, LcsAlgorithm::BitParallel, budget_override)
                              .length;
        } catch (const BudgetExceeded&) {
            out.stopped_early = true;
            break;
        } catch (const CapExceeded&) {
            // Word generation hit the materialization cap; same treatment
            // as running out of work budget.
            out.stopped_early = true;
            break;
        }
        out.text += std::to_string(n) + ' ' + std::to_string(value) + '\n';
        out.last_index = n;
    }
    return out;
}

} // namespace tmlcs
