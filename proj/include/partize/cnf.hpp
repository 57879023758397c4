#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace partize {

// A literal is a signed 1-based variable index: +x or -x.
using Literal = int;
using Clause = std::vector<Literal>;

struct CnfFormula {
    int num_vars = 0;
    // Each clause is non-empty, sorted by variable, duplicate-free and tautology-free.
    std::vector<Clause> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
};

// values[x-1] is the truth value of variable x.
struct Assignment {
    std::vector<bool> values;

    bool value(Literal lit) const;
};

struct CnfParseOptions {
    // Drop clauses containing x and -x instead of rejecting them.
    bool strip_tautologies = false;
};

// DIMACS CNF: "c" comments, a "p cnf <n> <m>" header, 0-terminated clauses (may span lines).
// Throws ParseError on malformed input, out-of-range literals, empty clauses, a clause count that
// disagrees with the header, or (by default) tautological clauses.
CnfFormula parse_dimacs_cnf(std::string_view text, const CnfParseOptions& opts = {});

std::string write_dimacs_cnf(const CnfFormula& phi);

// Throws ContractViolation if a clause is empty, tautological, or mentions an unknown variable.
void validate(const CnfFormula& phi);

bool satisfies(const Assignment& tau, const CnfFormula& phi);

} // namespace partize
