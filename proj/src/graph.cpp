#include "partize/graph.hpp"

#include "partize/errors.hpp"

#include <string>

namespace partize {

GraphBuilder::GraphBuilder(int n)
{
    if (n < 0)
        throw ContractViolation("graph: negative vertex count");
    rows_.assign(n, VertexSet(n));
}

GraphBuilder& GraphBuilder::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw ContractViolation("edge (" + std::to_string(u) + "," + std::to_string(v)
                                + ") out of range for n=" + std::to_string(n()));
    if (u == v)
        throw ContractViolation("loop at vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
    return *this;
}

Graph GraphBuilder::build() &&
{
    Graph g;
    g.rows_ = std::move(rows_);
    return g;
}

Graph GraphBuilder::build() const&
{
    Graph g;
    g.rows_ = rows_;
    return g;
}

Graph::Graph(int n)
    : Graph(GraphBuilder(n).build())
{
}

Graph::Graph(int n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    *this = std::move(b).build();
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

int Graph::edge_count() const
{
    int twice = 0;
    for (const auto& row : rows_)
        twice += row.count();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n(); ++u)
        for (int v = rows_[u].next(u); v != -1; v = rows_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& local) const
{
    VertexSet host(static_cast<int>(from_host.size()));
    local.for_each([&](int v) { host.set(to_host.at(v)); });
    return host;
}

VertexSet InducedSubgraph::project(const VertexSet& host) const
{
    VertexSet local(graph.n());
    host.for_each([&](int v) {
        int w = from_host.at(v);
        if (w < 0)
            throw ContractViolation("project: vertex " + std::to_string(v) + " not in subgraph");
        local.set(w);
    });
    return local;
}

Graph complement(const Graph& g)
{
    GraphBuilder b(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v))
                b.add_edge(u, v);
    return std::move(b).build();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.n())
        throw ContractViolation("induced_subgraph: vertex set universe does not match graph");
    InducedSubgraph out;
    out.to_host = s.members();
    out.from_host.assign(g.n(), -1);
    for (int i = 0; i < static_cast<int>(out.to_host.size()); ++i)
        out.from_host[out.to_host[i]] = i;
    GraphBuilder b(static_cast<int>(out.to_host.size()));
    for (int i = 0; i < b.n(); ++i) {
        const auto& row = g.neighbors(out.to_host[i]);
        for (int j = i + 1; j < b.n(); ++j)
            if (row.test(out.to_host[j]))
                b.add_edge(i, j);
    }
    out.graph = std::move(b).build();
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) { return induced_subgraph(g, ~s); }

bool is_clique(const Graph& g, const VertexSet& s)
{
    bool ok = true;
    s.for_each([&](int v) {
        if (ok && !s.without(v).is_subset_of(g.neighbors(v)))
            ok = false;
    });
    return ok;
}

bool is_independent(const Graph& g, const VertexSet& s)
{
    bool ok = true;
    s.for_each([&](int v) {
        if (ok && g.neighbors(v).intersects(s))
            ok = false;
    });
    return ok;
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    GraphBuilder out(a.n() + b.n());
    for (auto [u, v] : a.edges())
        out.add_edge(u, v);
    for (auto [u, v] : b.edges())
        out.add_edge(u + a.n(), v + a.n());
    return std::move(out).build();
}

Graph complete_graph(int n)
{
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw ContractViolation("cycle_graph needs n >= 3");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

Graph path_graph(int n)
{
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return std::move(b).build();
}

} // namespace partize
