#include "partize/canonical.hpp"

#include "partize/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace partize {

namespace {

int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

// Stable colour refinement with canonical colour names (ranks of sorted signatures).
std::vector<int> refine_colors(const Graph& g)
{
    const int n = g.n();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v)
        color[v] = g.degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> around;
            g.neighbors(v).for_each([&](int w) { around.push_back(color[w]); });
            std::sort(around.begin(), around.end());
            sig[v].insert(sig[v].end(), around.begin(), around.end());
        }
        std::vector<std::vector<int>> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        int now = static_cast<int>(distinct.size());
        if (now == classes)
            return color;
        classes = now;
    }
}

class LabelSearch {
public:
    LabelSearch(const Graph& g, std::vector<int> color)
        : g_(g)
        , n_(g.n())
        , pairs_(n_ * (n_ - 1) / 2)
        , color_(std::move(color))
        , order_(n_)
        , used_(n_, false)
    {
        slot_color_ = color_;
        std::sort(slot_color_.begin(), slot_color_.end());
        // Swapping twins is an automorphism fixing everything else.
        twin_.assign(n_, std::vector<bool>(n_, false));
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                twin_[u][v] = twin_[v][u] = g_.neighbors(u).without(v) == g_.neighbors(v).without(u);
    }

    CanonicalForm run()
    {
        place(0, 0);
        return CanonicalForm{n_, best_code_, best_order_};
    }

private:
    // prefix holds the bits of all pairs among positions < pos, left-aligned in `pairs_` bits.
    void place(int pos, std::uint64_t prefix)
    {
        if (pos == n_) {
            if (!found_ || prefix < best_code_) {
                found_ = true;
                best_code_ = prefix;
                best_order_ = order_;
            }
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used_[v] || color_[v] != slot_color_[pos])
                continue;
            bool shadowed = false;
            for (int u = 0; u < v && !shadowed; ++u)
                shadowed = !used_[u] && twin_[u][v];
            if (shadowed)
                continue;
            std::uint64_t code = prefix;
            for (int i = 0; i < pos; ++i)
                if (g_.adjacent(order_[i], v))
                    code |= std::uint64_t{1} << (pairs_ - 1 - pair_index(i, pos));
            if (found_) {
                int fixed = (pos + 1) * pos / 2;
                std::uint64_t mask = fixed == 0 ? 0 : (~std::uint64_t{0} << (pairs_ - fixed));
                if (pairs_ == 0)
                    mask = 0;
                if ((code & mask) > (best_code_ & mask))
                    continue;
            }
            used_[v] = true;
            order_[pos] = v;
            place(pos + 1, code);
            used_[v] = false;
        }
    }

    const Graph& g_;
    int n_;
    int pairs_;
    std::vector<int> color_;
    std::vector<int> slot_color_;
    std::vector<int> order_;
    std::vector<bool> used_;
    std::vector<std::vector<bool>> twin_;
    bool found_ = false;
    std::uint64_t best_code_ = 0;
    std::vector<int> best_order_;
};

} // namespace

CanonicalForm canonical_form(const Graph& g)
{
    if (g.n() > kMaxCanonicalVertices)
        throw BudgetExceeded("canonical_form supports at most " + std::to_string(kMaxCanonicalVertices)
                             + " vertices");
    return LabelSearch(g, refine_colors(g)).run();
}

Graph graph_from_code(int n, std::uint64_t code)
{
    if (n < 0 || n > kMaxCanonicalVertices)
        throw ContractViolation("graph_from_code: bad vertex count");
    const int pairs = n * (n - 1) / 2;
    GraphBuilder b(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> (pairs - 1 - pair_index(i, j))) & 1u)
                b.add_edge(i, j);
    return std::move(b).build();
}

bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.n() != b.n() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> enumerate_graphs(int n)
{
    if (n < 0 || n > 8)
        throw BudgetExceeded("enumerate_graphs supports n <= 8");
    std::vector<Graph> level{Graph(0)};
    for (int m = 1; m <= n; ++m) {
        std::map<std::uint64_t, Graph> next;
        for (const auto& h : level) {
            auto edges = h.edges();
            for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
                GraphBuilder b(m);
                for (auto [u, v] : edges)
                    b.add_edge(u, v);
                for (int u = 0; u < m - 1; ++u)
                    if ((mask >> u) & 1u)
                        b.add_edge(u, m - 1);
                Graph candidate = std::move(b).build();
                auto form = canonical_form(candidate);
                if (!next.contains(form.code))
                    next.emplace(form.code, graph_from_code(m, form.code));
            }
        }
        level.clear();
        for (auto& [code, graph] : next)
            level.push_back(std::move(graph));
    }
    return level;
}

} // namespace partize
