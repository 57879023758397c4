#pragma once

#include "partize/graph.hpp"

#include <cstdint>
#include <vector>

namespace partize {

// Largest graph canonical_form accepts (its adjacency code must fit in 64 bits).
inline constexpr int kMaxCanonicalVertices = 11;

struct CanonicalForm {
    int n = 0;
    // Upper-triangle adjacency bits in column order (0,1),(0,2),(1,2),(0,3),..., first pair most
    // significant; minimal over all relabelings that respect colour refinement.
    std::uint64_t code = 0;
    // order[i] = vertex of the input placed at canonical position i.
    std::vector<int> order;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.n == b.n && a.code == b.code; }
};

CanonicalForm canonical_form(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);
bool isomorphic(const Graph& a, const Graph& b);

// One representative (in canonical labeling) of every isomorphism class on n vertices. n <= 8.
std::vector<Graph> enumerate_graphs(int n);

} // namespace partize
