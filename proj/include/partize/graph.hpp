#pragma once

#include "partize/vertex_set.hpp"

#include <span>
#include <utility>
#include <vector>

namespace partize {

using Edge = std::pair<int, int>;

// Immutable undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    // Edgeless graph on n vertices.
    explicit Graph(int n);
    // Throws ContractViolation on loops or out-of-range endpoints; duplicate edges collapse.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int n() const noexcept { return static_cast<int>(rows_.size()); }
    bool adjacent(int u, int v) const { return rows_.at(u).test(v); }
    const VertexSet& neighbors(int v) const { return rows_.at(v); }
    int degree(int v) const { return rows_.at(v).count(); }
    int edge_count() const;
    // Sorted (u < v) lexicographic edge list.
    std::vector<Edge> edges() const;
    VertexSet vertices() const { return VertexSet::full(n()); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;
    std::vector<VertexSet> rows_;
};

// Mutable staging area for a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    GraphBuilder& add_edge(int u, int v);
    bool has_edge(int u, int v) const { return rows_.at(u).test(v); }
    int n() const noexcept { return static_cast<int>(rows_.size()); }
    Graph build() &&;
    Graph build() const&;

private:
    std::vector<VertexSet> rows_;
};

struct InducedSubgraph {
    Graph graph;
    // to_host[new] = old index; from_host[old] = new index or -1.
    std::vector<int> to_host;
    std::vector<int> from_host;

    VertexSet lift(const VertexSet& local) const;
    VertexSet project(const VertexSet& host) const;
};

Graph complement(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
// G - s, with index maps.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

// Disjoint union; b's vertices are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

} // namespace partize
