#include "partize/oracles.hpp"

#include "partize/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace partize {

std::string_view to_string(GraphClass c)
{
    switch (c) {
    case GraphClass::bipartite:
        return "bipartite";
    case GraphClass::chordal:
        return "chordal";
    case GraphClass::co_bipartite:
        return "co-bipartite";
    case GraphClass::co_chordal:
        return "co-chordal";
    case GraphClass::generic_small:
        return "generic-small";
    }
    return "unknown";
}

std::optional<std::vector<int>> two_coloring(const Graph& g)
{
    std::vector<int> color(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] != -1)
            continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            bool clash = false;
            g.neighbors(u).for_each([&](int v) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    clash = true;
                }
            });
            if (clash)
                return std::nullopt;
        }
    }
    return color;
}

std::vector<int> lexbfs_order(const Graph& g)
{
    const int n = g.n();
    // label[v] lists the visit steps (descending) of v's already-visited neighbours.
    std::vector<std::vector<int>> label(n);
    std::vector<bool> visited(n, false);
    std::vector<int> order;
    order.reserve(n);
    for (int step = n; step > 0; --step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (pick == -1 || label[v] > label[pick]))
                pick = v;
        visited[pick] = true;
        order.push_back(pick);
        g.neighbors(pick).for_each([&](int w) {
            if (!visited[w])
                label[w].push_back(step);
        });
    }
    return order;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order)
{
    if (static_cast<int>(order.size()) != g.n())
        return false;
    VertexSet later = VertexSet::full(g.n());
    VertexSet seen(g.n());
    for (int v : order) {
        if (v < 0 || v >= g.n() || seen.test(v))
            return false;
        seen.set(v);
    }
    for (int v : order) {
        later.reset(v);
        if (!is_clique(g, g.neighbors(v) & later))
            return false;
    }
    return true;
}

std::optional<std::vector<int>> lexbfs_peo(const Graph& g)
{
    auto order = lexbfs_order(g);
    std::reverse(order.begin(), order.end());
    if (!is_perfect_elimination_order(g, order))
        return std::nullopt;
    return order;
}

GraphClass classify(const Graph& g, const OracleConfig& cfg)
{
    if (two_coloring(g))
        return GraphClass::bipartite;
    if (lexbfs_peo(g))
        return GraphClass::chordal;
    Graph co = complement(g);
    if (two_coloring(co))
        return GraphClass::co_bipartite;
    if (lexbfs_peo(co))
        return GraphClass::co_chordal;
    if (g.n() <= cfg.generic_cap)
        return GraphClass::generic_small;
    throw UnsupportedClass("graph on " + std::to_string(g.n())
                           + " vertices is not bipartite, chordal, or a complement of either, and exceeds the "
                             "generic cap of "
                           + std::to_string(cfg.generic_cap));
}

namespace {

std::vector<VertexSet> blocks_from_colors(int n, const std::vector<int>& color)
{
    int colors = 0;
    for (int c : color)
        colors = std::max(colors, c + 1);
    std::vector<VertexSet> blocks(colors, VertexSet(n));
    for (int v = 0; v < n; ++v)
        blocks[color[v]].set(v);
    std::erase_if(blocks, [](const VertexSet& b) { return b.empty(); });
    return blocks;
}

VertexSet first_members(const VertexSet& s, int count)
{
    VertexSet out(s.universe());
    for (int v = s.first(); v != -1 && count > 0; v = s.next(v), --count)
        out.set(v);
    return out;
}

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g)
        : g_(g)
        , best_(g.n())
    {
    }

    VertexSet run()
    {
        expand(VertexSet(g_.n()), VertexSet::full(g_.n()));
        return best_;
    }

private:
    void expand(const VertexSet& chosen, VertexSet candidates)
    {
        if (candidates.empty()) {
            if (chosen.count() > best_.count())
                best_ = chosen;
            return;
        }
        for (int v = candidates.first(); v != -1; v = candidates.next(v)) {
            if (chosen.count() + candidates.count() <= best_.count())
                return;
            expand(chosen.with(v), candidates & g_.neighbors(v));
            candidates.reset(v);
        }
    }

    const Graph& g_;
    VertexSet best_;
};

// Exact l-colouring by backtracking over a degree-descending order.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int colors)
        : g_(g)
        , colors_(colors)
        , color_(g.n(), -1)
    {
        order_.resize(g.n());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    std::optional<std::vector<int>> run()
    {
        if (assign(0, 0))
            return color_;
        return std::nullopt;
    }

private:
    bool assign(int idx, int used)
    {
        if (idx == g_.n())
            return true;
        int v = order_[idx];
        int limit = std::min(used + 1, colors_);
        for (int c = 0; c < limit; ++c) {
            bool clash = false;
            g_.neighbors(v).for_each([&](int w) {
                if (color_[w] == c)
                    clash = true;
            });
            if (clash)
                continue;
            color_[v] = c;
            if (assign(idx + 1, std::max(used, c + 1)))
                return true;
            color_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    int colors_;
    std::vector<int> color_;
    std::vector<int> order_;
};

OracleResult trivial_coloring(const Graph& g, int l)
{
    const int n = g.n();
    if (l == 0) {
        if (n == 0)
            return OracleResult::partition({});
        return OracleResult::certificate(VertexSet::of(n, {0}));
    }
    auto edges = g.edges();
    if (edges.empty())
        return OracleResult::partition(n == 0 ? std::vector<VertexSet>{} : std::vector{VertexSet::full(n)});
    return OracleResult::certificate(VertexSet::of(n, {edges.front().first, edges.front().second}));
}

OracleResult coloring_direct(const Graph& g, GraphClass cls, int l)
{
    const int n = g.n();
    switch (cls) {
    case GraphClass::bipartite: {
        auto color = two_coloring(g);
        auto blocks = blocks_from_colors(n, *color);
        if (static_cast<int>(blocks.size()) <= l)
            return OracleResult::partition(std::move(blocks));
        return trivial_coloring(g, l);
    }
    case GraphClass::chordal: {
        auto peo = *lexbfs_peo(g);
        std::vector<int> color(n, -1);
        for (int i = n - 1; i >= 0; --i) {
            int v = peo[i];
            std::vector<int> holder(l + 1, -1);
            g.neighbors(v).for_each([&](int w) {
                if (color[w] >= 0 && color[w] <= l)
                    holder[color[w]] = w;
            });
            int c = 0;
            while (c <= l && holder[c] != -1)
                ++c;
            if (c == l) {
                VertexSet clique = VertexSet::of(n, {v});
                for (int k = 0; k < l; ++k)
                    clique.set(holder[k]);
                return OracleResult::certificate(std::move(clique));
            }
            color[v] = c;
        }
        return OracleResult::partition(blocks_from_colors(n, color));
    }
    case GraphClass::generic_small: {
        if (auto color = ColoringSearch(g, l).run())
            return OracleResult::partition(blocks_from_colors(n, *color));
        VertexSet clique = CliqueSearch(g).run();
        if (clique.count() < l + 1)
            throw ImperfectGraph("chromatic number exceeds " + std::to_string(l) + " but the largest clique has "
                                 + std::to_string(clique.count()) + " vertices");
        return OracleResult::certificate(first_members(clique, l + 1));
    }
    default:
        throw ContractViolation("coloring_direct: complement classes must be dispatched");
    }
}

struct BipartiteMatching {
    std::vector<int> side;
    std::vector<int> mate;
};

BipartiteMatching max_matching(const Graph& g)
{
    BipartiteMatching m{*two_coloring(g), std::vector<int>(g.n(), -1)};
    std::vector<bool> seen;
    auto augment = [&](auto&& self, int u) -> bool {
        for (int w = g.neighbors(u).first(); w != -1; w = g.neighbors(u).next(w)) {
            if (seen[w])
                continue;
            seen[w] = true;
            if (m.mate[w] == -1 || self(self, m.mate[w])) {
                m.mate[w] = u;
                m.mate[u] = w;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < g.n(); ++u) {
        if (m.side[u] != 0 || m.mate[u] != -1)
            continue;
        seen.assign(g.n(), false);
        augment(augment, u);
    }
    return m;
}

// Koenig: vertices reachable from unmatched left vertices by alternating paths give a maximum
// independent set (L ∩ Z) ∪ (R \ Z).
VertexSet koenig_independent_set(const Graph& g, const BipartiteMatching& m)
{
    const int n = g.n();
    VertexSet reached(n);
    std::deque<int> queue;
    for (int u = 0; u < n; ++u)
        if (m.side[u] == 0 && m.mate[u] == -1) {
            reached.set(u);
            queue.push_back(u);
        }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        g.neighbors(u).for_each([&](int w) {
            if (reached.test(w) || m.mate[u] == w)
                return;
            reached.set(w);
            int back = m.mate[w];
            if (back != -1 && !reached.test(back)) {
                reached.set(back);
                queue.push_back(back);
            }
        });
    }
    VertexSet independent(n);
    for (int v = 0; v < n; ++v)
        if ((m.side[v] == 0) == reached.test(v))
            independent.set(v);
    return independent;
}

struct CoverAndIndependent {
    std::vector<VertexSet> cover;
    VertexSet independent;
};

CoverAndIndependent bipartite_cover(const Graph& g)
{
    auto m = max_matching(g);
    std::vector<VertexSet> cover;
    VertexSet done(g.n());
    for (int v = 0; v < g.n(); ++v) {
        if (done.test(v))
            continue;
        VertexSet block = VertexSet::of(g.n(), {v});
        if (m.mate[v] != -1)
            block.set(m.mate[v]);
        done |= block;
        cover.push_back(std::move(block));
    }
    return {std::move(cover), koenig_independent_set(g, m)};
}

// Gavril: along a PEO, each still-uncovered vertex opens a clique with its uncovered later neighbours.
CoverAndIndependent chordal_cover(const Graph& g)
{
    auto peo = *lexbfs_peo(g);
    CoverAndIndependent out{{}, VertexSet(g.n())};
    VertexSet covered(g.n());
    for (int v : peo) {
        if (covered.test(v))
            continue;
        out.independent.set(v);
        VertexSet block = (g.neighbors(v) - covered).with(v);
        covered |= block;
        out.cover.push_back(std::move(block));
    }
    return out;
}

OracleResult cover_direct(const Graph& g, GraphClass cls, int l)
{
    switch (cls) {
    case GraphClass::bipartite:
    case GraphClass::chordal: {
        auto ci = cls == GraphClass::bipartite ? bipartite_cover(g) : chordal_cover(g);
        if (static_cast<int>(ci.cover.size()) <= l)
            return OracleResult::partition(std::move(ci.cover));
        return OracleResult::certificate(first_members(ci.independent, l + 1));
    }
    case GraphClass::generic_small:
        return coloring_direct(complement(g), GraphClass::generic_small, l);
    default:
        throw ContractViolation("cover_direct: complement classes must be dispatched");
    }
}

VertexSet clique_direct(const Graph& g, GraphClass cls)
{
    switch (cls) {
    case GraphClass::bipartite: {
        auto edges = g.edges();
        if (!edges.empty())
            return VertexSet::of(g.n(), {edges.front().first, edges.front().second});
        return g.n() == 0 ? VertexSet(0) : VertexSet::of(g.n(), {0});
    }
    case GraphClass::chordal: {
        auto peo = *lexbfs_peo(g);
        VertexSet later = VertexSet::full(g.n());
        VertexSet best(g.n());
        for (int v : peo) {
            VertexSet candidate = (g.neighbors(v) & later).with(v);
            later.reset(v);
            if (candidate.count() > best.count())
                best = candidate;
        }
        return best;
    }
    case GraphClass::generic_small:
        return CliqueSearch(g).run();
    default:
        throw ContractViolation("clique_direct: complement classes must be dispatched");
    }
}

VertexSet independent_direct(const Graph& g, GraphClass cls)
{
    switch (cls) {
    case GraphClass::bipartite:
        return bipartite_cover(g).independent;
    case GraphClass::chordal:
        return chordal_cover(g).independent;
    case GraphClass::generic_small:
        return CliqueSearch(complement(g)).run();
    default:
        throw ContractViolation("independent_direct: complement classes must be dispatched");
    }
}

void check_l(int l)
{
    if (l < 0)
        throw ContractViolation("oracle: negative part count");
}

} // namespace

OracleResult color_or_clique(const Graph& g, int l, const OracleConfig& cfg)
{
    check_l(l);
    if (l <= 1)
        return trivial_coloring(g, l);
    switch (GraphClass cls = classify(g, cfg)) {
    case GraphClass::co_bipartite:
        return cover_direct(complement(g), GraphClass::bipartite, l);
    case GraphClass::co_chordal:
        return cover_direct(complement(g), GraphClass::chordal, l);
    default:
        return coloring_direct(g, cls, l);
    }
}

OracleResult cover_or_independent(const Graph& g, int l, const OracleConfig& cfg)
{
    check_l(l);
    if (l <= 1)
        return trivial_coloring(complement(g), l);
    switch (GraphClass cls = classify(g, cfg)) {
    case GraphClass::co_bipartite:
        return coloring_direct(complement(g), GraphClass::bipartite, l);
    case GraphClass::co_chordal:
        return coloring_direct(complement(g), GraphClass::chordal, l);
    default:
        return cover_direct(g, cls, l);
    }
}

VertexSet max_clique(const Graph& g, const OracleConfig& cfg)
{
    switch (GraphClass cls = classify(g, cfg)) {
    case GraphClass::co_bipartite:
        return independent_direct(complement(g), GraphClass::bipartite);
    case GraphClass::co_chordal:
        return independent_direct(complement(g), GraphClass::chordal);
    default:
        return clique_direct(g, cls);
    }
}

VertexSet max_independent_set(const Graph& g, const OracleConfig& cfg)
{
    switch (GraphClass cls = classify(g, cfg)) {
    case GraphClass::co_bipartite:
        return clique_direct(complement(g), GraphClass::bipartite);
    case GraphClass::co_chordal:
        return clique_direct(complement(g), GraphClass::chordal);
    default:
        return independent_direct(g, cls);
    }
}

} // namespace partize
