#pragma once

#include "partize/graph.hpp"
#include "partize/solver.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace partize {

// (V1, V2) with omega(G[V1]) <= r and alpha(G[V2]) <= l.
struct SplitPartition {
    VertexSet low_clique;
    VertexSet low_independence;
};

// Exhaustive over V2 in increasing bitmask order with memoized omega/alpha tables.
// Throws BudgetExceeded when n > max_n.
std::optional<SplitPartition> is_rl_split(const Graph& g, int r, int l, int max_n = 20);

struct ForbiddenFamily {
    int r = 0;
    int l = 0;
    int cap = 0;
    // Largest member size (0 for an empty family).
    int d = 0;
    // Canonically labelled, pairwise non-isomorphic, ordered by size then code.
    std::vector<Graph> members;
    // True when the cap is known to reach the largest minimal obstruction for (r,l).
    bool certified_complete = false;
};

// Largest cap enumerate_forbidden_family accepts.
inline constexpr int kMaxFamilyCap = 9;

// All minimal non-(r,l)-split graphs with at most cap vertices, grown one vertex at a time from
// the (r,l)-split graphs of the previous size.
ForbiddenFamily enumerate_forbidden_family(int r, int l, int cap);

// Whether the largest minimal obstruction of (r,l)-split graphs is known to have at most cap
// vertices: (r,0) -> K_{r+1}, (0,l) -> (l+1)K_1, (1,1) -> C5.
bool family_certified(int r, int l, int cap);

struct Provenance {
    int member = 0;
    // embedding[i] = host vertex playing member vertex i
    std::vector<int> embedding;
};

struct SetSystem {
    int universe = 0;
    int d = 0;
    std::vector<VertexSet> sets;
    // Parallel to sets when produced by extract_hitting_instance; empty after kernelization. Kept when infeasible.
    std::vector<Provenance> provenance;
};

// One set per vertex subset of g inducing a copy of some family member. Throws BudgetExceeded
// when the number of candidate subsets exceeds budget.
SetSystem extract_hitting_instance(const Graph& g, const ForbiddenFamily& fam,
                                   std::int64_t budget = 50'000'000);

struct Kernel {
    SetSystem system;
    // Elements every hitting set within budget must contain (already charged against k).
    std::vector<int> forced;
    // Budget left for the reduced system.
    int k = 0;
    // No hitting set of size <= k exists.
    bool infeasible = false;
};

// Sunflower reduction: a sunflower with k+1 petals and core C forces C to be hit, so every set
// containing C is replaced by C; an empty core means NO. Singleton sets are forced out, and sets
// containing another set are dropped.
Kernel sunflower_kernel(const SetSystem& sys, int k, int d);

// Branch on the elements (ascending) of the first unhit set. stats->nodes <= (k+1) d^k.
std::optional<VertexSet> branch_hitting_set(const SetSystem& sys, int k, SearchStats* stats = nullptr);

struct KernelOptions {
    bool strict = false;
    std::int64_t budget = 50'000'000;
    // Receives the incomplete-family warning in non-strict mode.
    std::function<void(const std::string&)> warn;
};

struct KernelReport {
    SetSystem instance;
    Kernel kernel;
    std::optional<VertexSet> deletion;
    SearchStats branch_stats;
};

KernelReport kernelize(const Graph& g, int r, int l, int k, const ForbiddenFamily& fam, const KernelOptions& opts = {});

// Deletion set S with |S| <= k and g - S (r,l)-split, via extraction, kernelization, branching.
std::optional<VertexSet> solve_via_kernel(const Graph& g, int r, int l, int k, const ForbiddenFamily& fam,
                                          const KernelOptions& opts = {});

} // namespace partize
