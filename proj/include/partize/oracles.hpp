#pragma once

#include "partize/graph.hpp"

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace partize {

// Structured perfect classes with polynomial oracles, plus an exact exponential fallback.
enum class GraphClass { bipartite, chordal, co_bipartite, co_chordal, generic_small };

std::string_view to_string(GraphClass c);

struct OracleConfig {
    // Largest graph the exponential generic fallback accepts.
    int generic_cap = 24;
};

// Either a partition of V into at most l blocks, or an (l+1)-vertex certificate.
class OracleResult {
public:
    static OracleResult partition(std::vector<VertexSet> blocks) { return OracleResult(std::move(blocks)); }
    static OracleResult certificate(VertexSet witness) { return OracleResult(std::move(witness)); }

    bool is_partition() const noexcept { return value_.index() == 0; }
    const std::vector<VertexSet>& blocks() const { return std::get<0>(value_); }
    const VertexSet& witness() const { return std::get<1>(value_); }

private:
    explicit OracleResult(std::vector<VertexSet> blocks)
        : value_(std::move(blocks))
    {
    }
    explicit OracleResult(VertexSet witness)
        : value_(std::move(witness))
    {
    }
    std::variant<std::vector<VertexSet>, VertexSet> value_;
};

// First matching tag in the order bipartite, chordal, co-bipartite, co-chordal, generic-small.
// Throws UnsupportedClass when nothing matches and n exceeds the generic cap.
GraphClass classify(const Graph& g, const OracleConfig& cfg = {});

// BFS 2-colouring (lowest uncoloured vertex starts each component with colour 0), or none.
std::optional<std::vector<int>> two_coloring(const Graph& g);

// Lexicographic BFS visit order, ties to the lowest index.
std::vector<int> lexbfs_order(const Graph& g);

// Perfect elimination ordering (reverse LexBFS) when g is chordal, otherwise none.
std::optional<std::vector<int>> lexbfs_peo(const Graph& g);

// Every vertex's later neighbours in `order` form a clique.
bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order);

// At most l independent blocks covering V, or a clique of exactly l+1 vertices.
// l <= 1 is answered directly for any graph. Throws UnsupportedClass, or ImperfectGraph when the
// exact fallback sees chi > l without an (l+1)-clique.
OracleResult color_or_clique(const Graph& g, int l, const OracleConfig& cfg = {});

// At most l clique blocks covering V, or an independent set of exactly l+1 vertices.
OracleResult cover_or_independent(const Graph& g, int l, const OracleConfig& cfg = {});

VertexSet max_clique(const Graph& g, const OracleConfig& cfg = {});
VertexSet max_independent_set(const Graph& g, const OracleConfig& cfg = {});

} // namespace partize
