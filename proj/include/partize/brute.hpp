#pragma once

#include "partize/cnf.hpp"
#include "partize/graph.hpp"
#include "partize/solver.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace partize {

// Exhaustive ground-truth routines. They share no code with the oracles or the solver.

struct BruteBudget {
    // Search nodes (or enumerated candidates) allowed before BudgetExceeded.
    std::int64_t max_nodes = 200'000'000;
};

// Backtracking over part assignments in vertex order; a vertex may only open the lowest unused
// block of its kind. Returns non-empty blocks only.
std::optional<Refinement> brute_rl_partition(const Graph& g, int r, int l, const BruteBudget& budget = {});

// Smallest S (by size, then lexicographic) with |S| <= k and G - S an (r,l)-graph.
std::optional<VertexSet> brute_min_deletion(const Graph& g, int r, int l, int k, const BruteBudget& budget = {});

// First satisfying assignment in lexicographic order (x1 most significant, false < true).
std::optional<Assignment> brute_sat(const CnfFormula& phi, const BruteBudget& budget = {});

struct GraphInvariants {
    int omega = 0;
    int alpha = 0;
    int chi = 0;
    VertexSet clique;
    VertexSet independent;
    // colour index per vertex, colours 0..chi-1
    std::vector<int> coloring;
};

// Exact omega, alpha, chi by subset enumeration and backtracking. n <= 20.
GraphInvariants brute_omega_alpha_chi(const Graph& g, const BruteBudget& budget = {});

// Chromatic number alone, by trying 0, 1, 2, ... colours.
int brute_chromatic_number(const Graph& g, const BruteBudget& budget = {});

// chi(H) == omega(H) for every induced subgraph H. n <= 12.
bool brute_is_perfect(const Graph& g, const BruteBudget& budget = {});

// Smallest hitting set of size <= k by subset enumeration, or none.
std::optional<std::vector<int>> brute_hitting_set(int universe, const std::vector<VertexSet>& sets, int k,
                                                  const BruteBudget& budget = {});

} // namespace partize
