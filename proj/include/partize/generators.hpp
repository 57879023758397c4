#pragma once

#include "partize/cnf.hpp"
#include "partize/graph.hpp"

#include <cstdint>
#include <random>

namespace partize {

// Deterministic across platforms: sampling is done by hand on top of mt19937_64.
class Rng {
public:
    explicit Rng(std::uint64_t seed)
        : engine_(seed)
    {
    }
    // Uniform in [lo, hi].
    int uniform(int lo, int hi);
    double unit();
    bool bernoulli(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

// Each new vertex is joined to a random subset of a random maximal clique, so every vertex is
// simplicial when added.
Graph random_chordal(int n, Rng& rng);

// Sides {0..n1-1} and {n1..n1+n2-1}, each cross pair present with probability p.
Graph random_bipartite(int n1, int n2, double p, Rng& rng);

Graph random_gnp(int n, double p, Rng& rng);

// G(n,p) samples until one has no odd hole or antihole.
Graph random_perfect(int n, double p, Rng& rng);

struct PlantedInstance {
    Graph graph;
    // Deleting these leaves an (r,l)-graph.
    VertexSet noise;
};

// n - k base vertices split at random into r independent sets and l cliques with cross edges of
// probability p, plus k noise vertices with random adjacency, at random positions.
PlantedInstance planted(int r, int l, int k, int n, double p, Rng& rng);

// m clauses over n variables, widths uniform in [wmin, min(wmax, n)], distinct variables per clause.
CnfFormula random_cnf(int n, int m, int wmin, int wmax, Rng& rng);

} // namespace partize
