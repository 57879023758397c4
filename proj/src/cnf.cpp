#include "partize/cnf.hpp"

#include "partize/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace partize {

namespace {

bool by_variable(Literal a, Literal b)
{
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
}

bool is_tautology(const Clause& c)
{
    for (Literal lit : c)
        if (std::find(c.begin(), c.end(), -lit) != c.end())
            return true;
    return false;
}

std::optional<long long> to_int(std::string_view tok)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        return std::nullopt;
    return value;
}

} // namespace

bool Assignment::value(Literal lit) const
{
    int var = std::abs(lit);
    if (var == 0 || var > static_cast<int>(values.size()))
        throw ContractViolation("assignment has no variable " + std::to_string(var));
    return lit > 0 ? values[var - 1] : !values[var - 1];
}

CnfFormula parse_dimacs_cnf(std::string_view text, const CnfParseOptions& opts)
{
    CnfFormula phi;
    bool have_header = false;
    long long declared_clauses = 0;
    long long read_clauses = 0;
    Clause current;
    int current_line = 0;
    int line_no = 0;
    std::size_t pos = 0;

    auto finish_clause = [&](int line) {
        ++read_clauses;
        if (current.empty())
            throw ParseError(line, "empty clause");
        std::sort(current.begin(), current.end(), by_variable);
        current.erase(std::unique(current.begin(), current.end()), current.end());
        if (is_tautology(current)) {
            if (!opts.strip_tautologies)
                throw ParseError(line, "tautological clause (contains a variable and its negation)");
        } else {
            phi.clauses.push_back(current);
        }
        current.clear();
    };

    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string line(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;

        std::istringstream in(line);
        std::string tok;
        if (!(in >> tok) || tok == "c" || tok[0] == 'c' || tok == "%")
            continue;
        if (tok == "p") {
            std::string kind, n_tok, m_tok, extra;
            if (have_header)
                throw ParseError(line_no, "duplicate problem line");
            if (!(in >> kind >> n_tok >> m_tok) || kind != "cnf" || (in >> extra))
                throw ParseError(line_no, "malformed header, expected 'p cnf <n> <m>'");
            auto n = to_int(n_tok);
            auto m = to_int(m_tok);
            if (!n || !m || *n < 0 || *m < 0 || *n > 1'000'000)
                throw ParseError(line_no, "malformed header counts");
            phi.num_vars = static_cast<int>(*n);
            declared_clauses = *m;
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError(line_no, "clause before 'p cnf' header");
        do {
            auto lit = to_int(tok);
            if (!lit)
                throw ParseError(line_no, "non-integer literal '" + tok + "'");
            if (*lit == 0) {
                finish_clause(line_no);
                continue;
            }
            if (std::llabs(*lit) > phi.num_vars)
                throw ParseError(line_no, "literal " + tok + " out of range");
            if (current.empty())
                current_line = line_no;
            current.push_back(static_cast<Literal>(*lit));
        } while (in >> tok);
    }
    if (!have_header)
        throw ParseError(0, "missing 'p cnf' header");
    if (!current.empty())
        throw ParseError(current_line, "clause not terminated by 0");
    if (read_clauses != declared_clauses)
        throw ParseError(0, "header declares " + std::to_string(declared_clauses) + " clauses, found "
                                + std::to_string(read_clauses));
    return phi;
}

std::string write_dimacs_cnf(const CnfFormula& phi)
{
    std::ostringstream out;
    out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
    for (const auto& c : phi.clauses) {
        for (Literal lit : c)
            out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

void validate(const CnfFormula& phi)
{
    if (phi.num_vars < 0)
        throw ContractViolation("negative variable count");
    for (const auto& c : phi.clauses) {
        if (c.empty())
            throw ContractViolation("empty clause");
        for (Literal lit : c)
            if (lit == 0 || std::abs(lit) > phi.num_vars)
                throw ContractViolation("literal " + std::to_string(lit) + " out of range");
        if (is_tautology(c))
            throw ContractViolation("tautological clause");
    }
}

bool satisfies(const Assignment& tau, const CnfFormula& phi)
{
    if (static_cast<int>(tau.values.size()) != phi.num_vars)
        throw ContractViolation("assignment length does not match variable count");
    return std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const Clause& c) {
        return std::any_of(c.begin(), c.end(), [&](Literal lit) { return tau.value(lit); });
    });
}

} // namespace partize
