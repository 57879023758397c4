#pragma once

#include "partize/graph.hpp"
#include "partize/kernel.hpp"
#include "partize/solver.hpp"

#include "json.hpp"

#include <string_view>

namespace partize {

using Json = nlohmann::ordered_json;

// {"n": n, "edges": [[u,v],...]}, edges sorted.
Json graph_to_json(const Graph& g);
// Throws ParseError on malformed documents.
Graph graph_from_json(const Json& doc);

// DIMACS edge text, or a graph JSON document when the first non-blank character is '{'.
Graph read_graph(std::string_view text);

// {"deleted": [...], "independent_blocks": [[...]], "clique_blocks": [[...]], "stats": {...}}.
// Blocks come from the refinement; vertices are 0-based.
Json solution_to_json(const Solution& sol);

// Throws ParseError on malformed documents and ContractViolation on vertices outside [0, n).
Solution solution_from_json(const Json& doc, int n);

// {"universe": n, "d": d, "k": k, "sets": [[...]]}.
Json set_system_to_json(const SetSystem& sys, int k);

} // namespace partize
