#include "partize/dimacs.hpp"

#include "partize/errors.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace partize {

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
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

Graph parse_dimacs(std::string_view text)
{
    std::optional<GraphBuilder> builder;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c")
            continue;
        if (tok[0] == "p") {
            if (builder)
                throw ParseError(line_no, "duplicate problem line");
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
                throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            auto n = to_int(tok[2]);
            auto m = to_int(tok[3]);
            if (!n || !m || *n < 0 || *m < 0 || *n > 1'000'000)
                throw ParseError(line_no, "malformed header counts");
            builder.emplace(static_cast<int>(*n));
            continue;
        }
        if (tok[0] == "e") {
            if (!builder)
                throw ParseError(line_no, "edge line before header");
            if (tok.size() != 3)
                throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
            auto u = to_int(tok[1]);
            auto v = to_int(tok[2]);
            if (!u || !v)
                throw ParseError(line_no, "non-integer endpoint");
            if (*u < 1 || *v < 1 || *u > builder->n() || *v > builder->n())
                throw ParseError(line_no, "endpoint out of range");
            if (*u == *v)
                throw ParseError(line_no, "loop edge");
            builder->add_edge(static_cast<int>(*u - 1), static_cast<int>(*v - 1));
            continue;
        }
        throw ParseError(line_no, "unrecognised line '" + std::string(tok[0]) + "'");
    }
    if (!builder)
        throw ParseError(0, "missing 'p edge' header");
    return std::move(*builder).build();
}

std::string write_dimacs(const Graph& g)
{
    std::ostringstream out;
    auto edges = g.edges();
    out << "p edge " << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

} // namespace partize
