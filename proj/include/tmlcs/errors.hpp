#pragma once

#include <stdexcept>
#include <string>

namespace tmlcs {

/// Thrown when an operation would materialize more symbols than the
/// configured limit allows.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an LCS computation would exceed its work budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tmlcs
