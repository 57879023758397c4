#include "partize/brute.hpp"

#include "partize/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace partize {

namespace {

class Meter {
public:
    explicit Meter(const BruteBudget& b)
        : limit_(b.max_nodes)
    {
    }
    void tick(std::int64_t amount = 1)
    {
        used_ += amount;
        if (used_ > limit_)
            throw BudgetExceeded("exhaustive search exceeded its budget of " + std::to_string(limit_) + " nodes");
    }

private:
    std::int64_t limit_;
    std::int64_t used_ = 0;
};

class PartitionSearch {
public:
    PartitionSearch(const Graph& g, int r, int l, Meter& meter)
        : g_(g)
        , r_(r)
        , l_(l)
        , meter_(meter)
        , blocks_(r + l, std::vector<int>{})
    {
    }

    std::optional<Refinement> run()
    {
        if (!place(0))
            return std::nullopt;
        Refinement out;
        for (int b = 0; b < r_ + l_; ++b) {
            if (blocks_[b].empty())
                continue;
            auto set = VertexSet::of(g_.n(), std::span<const int>(blocks_[b]));
            (b < r_ ? out.independent : out.cliques).push_back(std::move(set));
        }
        return out;
    }

private:
    bool fits(int v, int b) const
    {
        bool want_edge = b >= r_;
        for (int u : blocks_[b])
            if (g_.adjacent(u, v) != want_edge)
                return false;
        return true;
    }

    bool place(int v)
    {
        meter_.tick();
        if (v == g_.n())
            return true;
        bool opened_independent = false;
        bool opened_clique = false;
        for (int b = 0; b < r_ + l_; ++b) {
            bool empty = blocks_[b].empty();
            bool& opened = b < r_ ? opened_independent : opened_clique;
            if (empty) {
                if (opened)
                    continue;
                opened = true;
            }
            if (!fits(v, b))
                continue;
            blocks_[b].push_back(v);
            if (place(v + 1))
                return true;
            blocks_[b].pop_back();
        }
        return false;
    }

    const Graph& g_;
    int r_;
    int l_;
    Meter& meter_;
    std::vector<std::vector<int>> blocks_;
};

bool next_combination(std::vector<int>& comb, int n)
{
    int k = static_cast<int>(comb.size());
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i)
        --i;
    if (i < 0)
        return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j)
        comb[j] = comb[j - 1] + 1;
    return true;
}

bool colorable(const Graph& g, int colors, std::vector<int>& color, int v, Meter& meter)
{
    meter.tick();
    if (v == g.n())
        return true;
    int used = 0;
    for (int u = 0; u < v; ++u)
        used = std::max(used, color[u] + 1);
    for (int c = 0; c < std::min(colors, used + 1); ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (color[u] == c && g.adjacent(u, v))
                ok = false;
        if (!ok)
            continue;
        color[v] = c;
        if (colorable(g, colors, color, v + 1, meter))
            return true;
    }
    color[v] = -1;
    return false;
}

std::vector<int> optimal_coloring(const Graph& g, Meter& meter)
{
    for (int c = 0;; ++c) {
        std::vector<int> color(g.n(), -1);
        if (colorable(g, c, color, 0, meter))
            return color;
    }
}

} // namespace

std::optional<Refinement> brute_rl_partition(const Graph& g, int r, int l, const BruteBudget& budget)
{
    if (r < 0 || l < 0)
        throw ContractViolation("brute_rl_partition: negative part count");
    Meter meter(budget);
    return PartitionSearch(g, r, l, meter).run();
}

std::optional<VertexSet> brute_min_deletion(const Graph& g, int r, int l, int k, const BruteBudget& budget)
{
    const int n = g.n();
    Meter meter(budget);
    for (int size = 0; size <= std::min(k, n); ++size) {
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i)
            comb[i] = i;
        do {
            meter.tick();
            VertexSet s = VertexSet::of(n, std::span<const int>(comb));
            auto rest = delete_vertices(g, s).graph;
            if (PartitionSearch(rest, r, l, meter).run())
                return s;
        } while (next_combination(comb, n));
    }
    return std::nullopt;
}

std::optional<Assignment> brute_sat(const CnfFormula& phi, const BruteBudget& budget)
{
    const int n = phi.num_vars;
    if (n > 62)
        throw BudgetExceeded("brute_sat: too many variables");
    Meter meter(budget);
    Assignment tau{std::vector<bool>(n, false)};
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        meter.tick();
        for (int x = 0; x < n; ++x)
            tau.values[x] = (code >> (n - 1 - x)) & 1u;
        if (satisfies(tau, phi))
            return tau;
    }
    return std::nullopt;
}

GraphInvariants brute_omega_alpha_chi(const Graph& g, const BruteBudget& budget)
{
    const int n = g.n();
    if (n > 20)
        throw BudgetExceeded("brute_omega_alpha_chi: n = " + std::to_string(n) + " exceeds 20");
    Meter meter(budget);
    GraphInvariants out;
    out.clique = VertexSet(n);
    out.independent = VertexSet(n);
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        g.neighbors(v).for_each([&](int w) { adj[v] |= 1u << w; });
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        meter.tick();
        int size = std::popcount(mask);
        bool clique = true;
        bool independent = true;
        for (int v = 0; v < n && (clique || independent); ++v) {
            if (!((mask >> v) & 1u))
                continue;
            std::uint32_t others = mask & ~(1u << v);
            if ((adj[v] & others) != others)
                clique = false;
            if (adj[v] & others)
                independent = false;
        }
        auto as_set = [&] {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1u)
                    s.set(v);
            return s;
        };
        if (clique && size > out.omega) {
            out.omega = size;
            out.clique = as_set();
        }
        if (independent && size > out.alpha) {
            out.alpha = size;
            out.independent = as_set();
        }
    }
    out.coloring = optimal_coloring(g, meter);
    for (int c : out.coloring)
        out.chi = std::max(out.chi, c + 1);
    return out;
}

int brute_chromatic_number(const Graph& g, const BruteBudget& budget)
{
    Meter meter(budget);
    int chi = 0;
    for (int c : optimal_coloring(g, meter))
        chi = std::max(chi, c + 1);
    return chi;
}

bool brute_is_perfect(const Graph& g, const BruteBudget& budget)
{
    const int n = g.n();
    if (n > 12)
        throw BudgetExceeded("brute_is_perfect: n = " + std::to_string(n) + " exceeds 12");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u)
                s.set(v);
        auto inv = brute_omega_alpha_chi(induced_subgraph(g, s).graph, budget);
        if (inv.chi != inv.omega)
            return false;
    }
    return true;
}

std::optional<std::vector<int>> brute_hitting_set(int universe, const std::vector<VertexSet>& sets, int k,
                                                  const BruteBudget& budget)
{
    Meter meter(budget);
    for (int size = 0; size <= std::min(k, universe); ++size) {
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i)
            comb[i] = i;
        do {
            meter.tick();
            VertexSet chosen = VertexSet::of(universe, std::span<const int>(comb));
            if (std::all_of(sets.begin(), sets.end(), [&](const VertexSet& s) { return s.intersects(chosen); }))
                return comb;
        } while (next_combination(comb, universe));
    }
    return std::nullopt;
}

} // namespace partize
