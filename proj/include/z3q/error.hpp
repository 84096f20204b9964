#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace z3q {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* Raised when a rewrite exceeds its step budget. */
struct BudgetExceeded : Error {
    explicit BudgetExceeded(std::size_t budget)
        : Error("rewrite step budget exceeded (" + std::to_string(budget) + " steps)") {}
};

/* Raised on malformed expression input; offset is the byte position of the problem. */
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t at)
        : Error(what + " (at offset " + std::to_string(at) + ")"), offset(at) {}
};

}  // namespace z3q
