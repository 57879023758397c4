#pragma once

#include "partize/graph.hpp"

#include <string>
#include <string_view>

namespace partize {

// DIMACS edge format: optional "c" comment lines, one "p edge <n> <m>" header (also "p col"),
// then "e <u> <v>" lines with 1-based endpoints. Repeated edges are idempotent; the header's m
// is informational only.
Graph parse_dimacs(std::string_view text);

// Header plus the sorted edge list, 1-based, newline terminated.
std::string write_dimacs(const Graph& g);

} // namespace partize
