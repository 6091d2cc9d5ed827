#pragma once

#include <stdexcept>
#include <string>

namespace pqsim {

/// Invalid policy or engine configuration (e.g. push-out with B < 2L).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Bad generator or query parameters.
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A bound was requested outside the regime its guarantee needs.
struct RegimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Caller broke an operation precondition.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Malformed trace file; carries the offending line number.
struct TraceParseError : std::runtime_error {
    TraceParseError(long long line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    long long line_number;
};

/// The exact search exceeded its state budget.
struct OracleBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ratio requested for a run that transmitted nothing.
struct UndefinedRatioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pqsim
