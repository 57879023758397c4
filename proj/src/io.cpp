#include "partize/io.hpp"

#include "partize/dimacs.hpp"
#include "partize/errors.hpp"

#include <algorithm>

namespace partize {

namespace {

Json members(const VertexSet& s)
{
    return Json(s.members());
}

ParseError bad(const std::string& what)
{
    return ParseError(0, what);
}

std::vector<int> int_list(const Json& doc, const char* field)
{
    if (!doc.is_array())
        throw bad(std::string(field) + ": expected an array of integers");
    std::vector<int> out;
    for (const auto& x : doc) {
        if (!x.is_number_integer())
            throw bad(std::string(field) + ": expected an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

VertexSet vertex_set(const std::vector<int>& vs, int n, const char* field)
{
    VertexSet s(n);
    for (int v : vs) {
        if (v < 0 || v >= n)
            throw ContractViolation(std::string(field) + ": vertex " + std::to_string(v) + " is not in the graph");
        s.set(v);
    }
    return s;
}

std::vector<VertexSet> blocks(const Json& doc, const char* field, int n)
{
    if (!doc.contains(field) || !doc[field].is_array())
        throw bad(std::string("missing array field \"") + field + "\"");
    std::vector<VertexSet> out;
    for (const auto& b : doc[field])
        out.push_back(vertex_set(int_list(b, field), n, field));
    return out;
}

} // namespace

Json graph_to_json(const Graph& g)
{
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<int>() < 0)
        throw bad("graph JSON: missing non-negative integer \"n\"");
    const int n = doc["n"].get<int>();
    GraphBuilder b(n);
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array())
            throw bad("graph JSON: \"edges\" must be an array");
        for (const auto& e : doc["edges"]) {
            auto uv = int_list(e, "edges");
            if (uv.size() != 2)
                throw bad("graph JSON: edge must have two endpoints");
            if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n || uv[0] == uv[1])
                throw bad("graph JSON: invalid edge [" + std::to_string(uv[0]) + "," + std::to_string(uv[1]) + "]");
            b.add_edge(uv[0], uv[1]);
        }
    }
    return std::move(b).build();
}

Graph read_graph(std::string_view text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        Json doc = Json::parse(text, nullptr, false);
        if (doc.is_discarded())
            throw bad("graph JSON: not valid JSON");
        return graph_from_json(doc);
    }
    return parse_dimacs(text);
}

Json solution_to_json(const Solution& sol)
{
    Json ind = Json::array();
    Json cl = Json::array();
    if (sol.partition.refinement) {
        for (const auto& b : sol.partition.refinement->independent)
            ind.push_back(members(b));
        for (const auto& b : sol.partition.refinement->cliques)
            cl.push_back(members(b));
    }
    return Json{{"deleted", members(sol.deleted)},
                {"independent_blocks", std::move(ind)},
                {"clique_blocks", std::move(cl)},
                {"stats", {{"nodes", sol.stats.nodes}, {"depth", sol.stats.depth}}}};
}

Solution solution_from_json(const Json& doc, int n)
{
    if (!doc.is_object())
        throw bad("solution JSON: expected an object");
    if (!doc.contains("deleted"))
        throw bad("solution JSON: missing \"deleted\"");
    Solution sol{vertex_set(int_list(doc["deleted"], "deleted"), n, "deleted"), {VertexSet(n), VertexSet(n), Refinement{}}, {}};
    auto& ref = *sol.partition.refinement;
    ref.independent = blocks(doc, "independent_blocks", n);
    ref.cliques = blocks(doc, "clique_blocks", n);
    for (const auto& b : ref.independent)
        sol.partition.independent_side |= b;
    for (const auto& b : ref.cliques)
        sol.partition.clique_side |= b;
    if (doc.contains("stats") && doc["stats"].is_object()) {
        const auto& st = doc["stats"];
        if (st.contains("nodes") && st["nodes"].is_number_integer())
            sol.stats.nodes = st["nodes"].get<std::int64_t>();
        if (st.contains("depth") && st["depth"].is_number_integer())
            sol.stats.depth = st["depth"].get<int>();
    }
    return sol;
}

Json set_system_to_json(const SetSystem& sys, int k)
{
    Json sets = Json::array();
    for (const auto& s : sys.sets)
        sets.push_back(members(s));
    return Json{{"universe", sys.universe}, {"d", sys.d}, {"k", k}, {"sets", std::move(sets)}};
}

} // namespace partize
