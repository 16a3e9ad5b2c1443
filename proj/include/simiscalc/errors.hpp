#ifndef SIMISCALC_ERRORS_HPP
#define SIMISCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simiscalc {

/// Base class of everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two operands live in rings with different variable counts.
struct AmbientMismatchError : Error {
    AmbientMismatchError(int lhs, int rhs)
        : Error("ambient mismatch: " + std::to_string(lhs) + " vs " +
                std::to_string(rhs) + " variables") {}
};

/// Exponent arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

/// Operation applied outside its stated domain (zero/unit ideal, bad prime, ...).
struct DomainError : Error {
    using Error::Error;
};

/// An intermediate antichain grew past the configured generator ceiling.
struct GeneratorLimitError : Error {
    explicit GeneratorLimitError(std::size_t limit)
        : Error("generator count exceeds the configured ceiling of " +
                std::to_string(limit) +
                " (override with SIMISCALC_GEN_LIMIT)") {}
};

/// A generator has support size != 2 where a support-2 ideal is required.
struct NotSupport2Error : DomainError {
    using DomainError::DomainError;
};

/// Text input does not match the ideal grammar.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what_)
        : Error("parse error at " + std::to_string(line_) + ":" +
                std::to_string(column_) + ": " + what_),
          line(line_), column(column_) {}
};

} // namespace simiscalc

#endif
