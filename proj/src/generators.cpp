#include "partize/generators.hpp"

#include "partize/errors.hpp"
#include "partize/holes.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace partize {

int Rng::uniform(int lo, int hi)
{
    if (lo > hi)
        throw ContractViolation("Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do
        x = engine_();
    while (x >= limit);
    return lo + static_cast<int>(x % span);
}

double Rng::unit()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

namespace {

void check_probability(double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw ContractViolation("edge probability must lie in [0, 1]");
}

std::vector<int> shuffled(int n, Rng& rng)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.uniform(0, i)]);
    return perm;
}

} // namespace

Graph random_chordal(int n, Rng& rng)
{
    if (n < 0)
        throw ContractViolation("random_chordal: negative n");
    GraphBuilder b(n);
    std::vector<std::vector<int>> cliques;
    for (int v = 0; v < n; ++v) {
        if (cliques.empty()) {
            cliques.push_back({v});
            continue;
        }
        const auto& host = cliques[rng.uniform(0, static_cast<int>(cliques.size()) - 1)];
        std::vector<int> attach;
        for (int u : host)
            if (rng.bernoulli(0.5))
                b.add_edge(u, v), attach.push_back(u);
        attach.push_back(v);
        if (attach.size() == host.size() + 1) {
            auto grown = host;
            grown.push_back(v);
            auto it = std::find(cliques.begin(), cliques.end(), host);
            *it = std::move(grown);
        } else {
            cliques.push_back(std::move(attach));
        }
    }
    return std::move(b).build();
}

Graph random_bipartite(int n1, int n2, double p, Rng& rng)
{
    if (n1 < 0 || n2 < 0)
        throw ContractViolation("random_bipartite: negative side");
    check_probability(p);
    GraphBuilder b(n1 + n2);
    for (int u = 0; u < n1; ++u)
        for (int v = n1; v < n1 + n2; ++v)
            if (rng.bernoulli(p))
                b.add_edge(u, v);
    return std::move(b).build();
}

Graph random_gnp(int n, double p, Rng& rng)
{
    if (n < 0)
        throw ContractViolation("random_gnp: negative n");
    check_probability(p);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                b.add_edge(u, v);
    return std::move(b).build();
}

Graph random_perfect(int n, double p, Rng& rng)
{
    while (true) {
        Graph g = random_gnp(n, p, rng);
        if (!find_odd_hole_or_antihole(g))
            return g;
    }
}

PlantedInstance planted(int r, int l, int k, int n, double p, Rng& rng)
{
    if (r < 0 || l < 0 || k < 0 || n < 0)
        throw ContractViolation("planted: negative parameter");
    if (k > n)
        throw ContractViolation("planted: k exceeds n");
    if (r + l == 0 && n > k)
        throw ContractViolation("planted: (0,0) admits no base vertices");
    check_probability(p);
    auto perm = shuffled(n, rng);
    const int base = n - k;
    // block[i] for base slot i: 0..r-1 independent, r..r+l-1 clique
    std::vector<int> block(base);
    for (int i = 0; i < base; ++i)
        block[i] = rng.uniform(0, r + l - 1);
    GraphBuilder b(n);
    for (int i = 0; i < base; ++i)
        for (int j = i + 1; j < base; ++j) {
            bool edge;
            if (block[i] != block[j])
                edge = rng.bernoulli(p);
            else
                edge = block[i] >= r;
            if (edge)
                b.add_edge(perm[i], perm[j]);
        }
    VertexSet noise(n);
    for (int i = base; i < n; ++i) {
        noise.set(perm[i]);
        for (int j = 0; j < n; ++j)
            if (j != i && (j < base || j > i) && rng.bernoulli(0.5))
                b.add_edge(perm[i], perm[j]);
    }
    return {std::move(b).build(), std::move(noise)};
}

CnfFormula random_cnf(int n, int m, int wmin, int wmax, Rng& rng)
{
    if (n < 1 || m < 0 || wmin < 1 || wmax < wmin || wmin > n)
        throw ContractViolation("random_cnf: need n >= 1, m >= 0, 1 <= wmin <= min(wmax, n)");
    CnfFormula phi;
    phi.num_vars = n;
    for (int c = 0; c < m; ++c) {
        int width = rng.uniform(wmin, std::min(wmax, n));
        auto vars = shuffled(n, rng);
        vars.resize(width);
        std::sort(vars.begin(), vars.end());
        Clause clause;
        for (int x : vars)
            clause.push_back(rng.bernoulli(0.5) ? x + 1 : -(x + 1));
        phi.clauses.push_back(std::move(clause));
    }
    return phi;
}

} // namespace partize
