#pragma once

#include <stdexcept>
#include <string>

namespace partize {

// Malformed text input. line is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what)
        , line_(line)
    {
    }
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Caller broke a documented precondition (bad index, mismatched sizes, invalid certificate).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// No oracle covers the graph (not bipartite/chordal/co-* and above the generic cap).
class UnsupportedClass : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An oracle found chi > l but no (l+1)-clique: the input is not perfect.
class ImperfectGraph : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exhaustive routine would exceed its enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace partize

namespace partize {

// The forbidden family is not certified complete for the requested (r,l) and strict mode is on.
class IncompleteFamily : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace partize
