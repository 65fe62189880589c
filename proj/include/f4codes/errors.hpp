#ifndef F4CODES_ERRORS_HPP
#define F4CODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace f4codes {

// Malformed input text (code files, polynomial syntax).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would visit more codewords than the caller allowed.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A stated precondition does not hold for the given arguments.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Default cap on enumerated codewords. Callers can raise or lower it per call;
// the command line tool also reads F4CODES_BUDGET.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 24;

} // namespace f4codes

#endif
