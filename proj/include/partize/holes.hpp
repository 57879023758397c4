#pragma once

#include "partize/graph.hpp"

#include <optional>
#include <vector>

namespace partize {

enum class HoleKind { hole, antihole };

struct OddHoleCertificate {
    // Vertices in cycle order; for an antihole the cycle lives in the complement.
    std::vector<int> cycle;
    HoleKind kind;
};

// Shortest induced odd cycle of length >= 5 (lengths 5, 7, 9, ... in turn), smallest start vertex
// first, neighbors in ascending order.
std::optional<std::vector<int>> find_odd_hole(const Graph& g);

// Odd hole of g, else odd hole of complement(g) reported as an antihole. None means g is perfect.
// Exhaustive; intended for n up to about 14.
std::optional<OddHoleCertificate> find_odd_hole_or_antihole(const Graph& g);

// Checks that cert really is an induced odd cycle (>= 5) of g or of its complement.
bool is_valid_certificate(const Graph& g, const OddHoleCertificate& cert);

} // namespace partize
