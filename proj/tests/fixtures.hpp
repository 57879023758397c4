#pragma once

#include "partize/cnf.hpp"
#include "partize/generators.hpp"
#include "partize/graph.hpp"

#include <string>
#include <vector>

namespace fixtures {

using partize::Graph;

inline Graph c4() { return partize::cycle_graph(4); }
inline Graph c5() { return partize::cycle_graph(5); }
inline Graph k(int n) { return partize::complete_graph(n); }
inline Graph p3() { return partize::path_graph(3); }
inline Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }
inline Graph edgeless(int n) { return Graph(n); }

// (x1 or not x2) and (not x1)
inline partize::CnfFormula fig1_formula() { return {2, {{1, -2}, {-1}}}; }

struct CorpusGraph {
    std::string kind;
    std::uint64_t seed;
    Graph graph;
};

// Seeded mix of bipartite, chordal and audited generic perfect graphs with 1 <= n <= 10.
inline std::vector<CorpusGraph> small_corpus(int per_kind)
{
    std::vector<CorpusGraph> out;
    for (int i = 0; i < per_kind; ++i) {
        std::uint64_t seed = 1000 + i;
        partize::Rng rng(seed);
        int n1 = rng.uniform(1, 5);
        int n2 = rng.uniform(0, 10 - n1);
        double p = 0.2 + 0.6 * rng.unit();
        out.push_back({"bipartite", seed, partize::random_bipartite(n1, n2, p, rng)});
    }
    for (int i = 0; i < per_kind; ++i) {
        std::uint64_t seed = 2000 + i;
        partize::Rng rng(seed);
        out.push_back({"chordal", seed, partize::random_chordal(rng.uniform(1, 10), rng)});
    }
    for (int i = 0; i < per_kind; ++i) {
        std::uint64_t seed = 3000 + i;
        partize::Rng rng(seed);
        int n = rng.uniform(1, 10);
        double p = 0.15 + 0.7 * rng.unit();
        out.push_back({"generic", seed, partize::random_perfect(n, p, rng)});
    }
    return out;
}

} // namespace fixtures
