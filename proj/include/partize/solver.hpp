#pragma once

#include "partize/graph.hpp"
#include "partize/oracles.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace partize {

// Explicit blocks certifying an IC-partition: independent sets refine the first side, cliques the
// second. Empty blocks are never stored.
struct Refinement {
    std::vector<VertexSet> independent;
    std::vector<VertexSet> cliques;
};

// Two-block partition of the surviving vertices. Sets are indexed over the host graph; vertices
// outside both sides are deleted.
struct ICPartition {
    VertexSet independent_side;
    VertexSet clique_side;
    std::optional<Refinement> refinement;

    VertexSet covered() const { return independent_side | clique_side; }
};

// Bit i (over the ascending members of some vertex set) is 1 iff that vertex is on the clique side.
class LabelVector {
public:
    explicit LabelVector(std::vector<bool> bits)
        : bits_(std::move(bits))
    {
    }
    // Labels of `over` under p; every member of `over` must lie on one side of p.
    static LabelVector of(const ICPartition& p, const VertexSet& over);

    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<bool>& bits() const noexcept { return bits_; }

private:
    std::vector<bool> bits_;
};

// Number of mismatching positions. Throws ContractViolation on unequal lengths.
int hamming(const LabelVector& a, const LabelVector& b);

struct SolveParams {
    int r = 0;
    int l = 0;
    int k = 0;
    int rho = 0;
};

struct SearchStats {
    // Recursion nodes that got past the k < 0 / rho < 0 check.
    std::int64_t nodes = 0;
    // Deepest such node, the root being depth 1.
    int depth = 0;

    SearchStats& operator+=(const SearchStats& other);
};

struct Solution {
    VertexSet deleted;
    ICPartition partition;
    SearchStats stats;
};

struct SearchOptions {
    OracleConfig oracle;
    // Skip states (deleted set, first side, k, rho) already known to fail. Never changes the
    // returned solution, only the node count.
    bool memoize_failures = true;
};

struct ShortResult {
    std::optional<Solution> solution;
    SearchStats stats;
};

// Bounded search for S (|S| <= k) and an IC-partition P of G - S within Hamming distance rho of
// q restricted to G - S. q must cover every vertex of g. Deletions are tried before moves, both in
// ascending vertex order.
ShortResult short_vertex_partization(const Graph& g, const SolveParams& params, const ICPartition& q,
                                     const SearchOptions& opts = {});

// Hamming budget used to compress a deletion set of size k+1 to size k.
int compression_budget(int r, int l, int k);

// Compresses s_prev (|s_prev| <= k+1) with q an IC-partition of g - s_prev into a solution of size
// at most k, by treating g as an (r+k+1, l)-graph with sides (q1 ∪ s_prev, q2).
ShortResult compress(const Graph& g, int r, int l, int k, const VertexSet& s_prev, const ICPartition& q,
                     const SearchOptions& opts = {});

struct CompressionRun {
    int vertices = 0;
    SolveParams params;
    SearchStats stats;
    bool solved = false;
};

struct SolveReport {
    std::optional<Solution> solution;
    std::vector<CompressionRun> runs;
    SearchStats total;
};

// Iterative compression over the prefixes G[{0..i-1}]. The input is trusted to be perfect.
SolveReport solve(const Graph& g, int r, int l, int k, const SearchOptions& opts = {});

// solve with k = 0.
std::optional<ICPartition> recognize(const Graph& g, int r, int l, const SearchOptions& opts = {});

struct Verdict {
    bool ok = true;
    std::string reason;
    explicit operator bool() const noexcept { return ok; }
};

// Oracle-free check of a solution: budget, block counts, disjoint cover, and every block's
// independence or clique property.
Verdict verify_solution(const Graph& g, int r, int l, int k, const Solution& sol);

// Checks a refined partition of g - deleted without the budget on |deleted|.
Verdict verify_partition(const Graph& g, int r, int l, const VertexSet& deleted, const ICPartition& p);

} // namespace partize
