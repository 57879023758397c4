#include "doctest.h"
#include "checks.hpp"
#include "fixtures.hpp"

#include "partize/brute.hpp"
#include "partize/canonical.hpp"
#include "partize/holes.hpp"
#include "partize/errors.hpp"
#include "partize/sat_reduction.hpp"
#include "partize/solver.hpp"

using namespace partize;
using namespace fixtures;

namespace {

LabelVector bits(const std::string& s)
{
    std::vector<bool> b;
    for (char c : s)
        b.push_back(c == '1');
    return LabelVector(b);
}

ICPartition sides(int n, const VertexSet& second)
{
    return {VertexSet::full(n) - second, second, std::nullopt};
}

// Exhaustive: is there S (|S| <= k) and a valid (r,l)-partition P of g - S within distance rho of q?
bool brute_short(const Graph& g, const SolveParams& p, const ICPartition& q)
{
    const int n = g.n();
    const std::uint32_t full = (1u << n) - 1;
    auto chi = checks::subset_chromatic(g);
    auto cover = checks::subset_cover(g);
    const std::uint32_t q2 = checks::to_mask(q.clique_side);
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (std::popcount(s) > p.k)
            continue;
        const std::uint32_t rest = full & ~s;
        for (std::uint32_t second = rest;; second = (second - 1) & rest) {
            if (std::popcount((second ^ q2) & rest) <= p.rho && chi[rest & ~second] <= p.r && cover[second] <= p.l)
                return true;
            if (second == 0)
                break;
        }
    }
    return false;
}

} // namespace

TEST_CASE("hamming examples")
{
    CHECK(hamming(bits("0011"), bits("0101")) == 2);
    CHECK(hamming(bits("0110101"), bits("0110101")) == 0);
    CHECK(hamming(bits("0110101"), bits("1001010")) == 7);
    CHECK_THROWS_AS(hamming(bits("01"), bits("011")), ContractViolation);
}

TEST_CASE("label vectors follow the clique side")
{
    ICPartition p{VertexSet::of(5, {0, 3}), VertexSet::of(5, {1, 4}), std::nullopt};
    auto lv = LabelVector::of(p, VertexSet::of(5, {0, 1, 3, 4}));
    CHECK(lv.bits() == std::vector<bool>{false, true, false, true});
    CHECK_THROWS_AS(LabelVector::of(p, VertexSet::full(5)), ContractViolation);
}

TEST_CASE("short_vertex_partization examples")
{
    auto tri = short_vertex_partization(k(3), {1, 0, 2, 0}, sides(3, VertexSet(3)));
    REQUIRE(tri.solution);
    CHECK(tri.solution->deleted.count() == 2);
    REQUIRE(tri.solution->partition.refinement);
    CHECK(tri.solution->partition.refinement->independent.size() == 1);
    CHECK(verify_solution(k(3), 1, 0, 2, *tri.solution));

    auto sq = short_vertex_partization(c4(), {2, 0, 0, 0}, sides(4, VertexSet(4)));
    REQUIRE(sq.solution);
    CHECK(sq.solution->deleted.empty());
    auto blocks = sq.solution->partition.refinement->independent;
    std::sort(blocks.begin(), blocks.end());
    CHECK(blocks == std::vector<VertexSet>{VertexSet::of(4, {0, 2}), VertexSet::of(4, {1, 3})});

    auto neg = short_vertex_partization(diamond(), {1, 1, -1, 5}, sides(4, VertexSet(4)));
    CHECK_FALSE(neg.solution);
    CHECK(neg.stats.nodes == 0);
    CHECK_FALSE(short_vertex_partization(diamond(), {1, 1, 3, -1}, sides(4, VertexSet(4))).solution);
}

TEST_CASE("compression examples")
{
    CHECK(compression_budget(1, 1, 0) == 3);

    auto k4q = ICPartition{VertexSet::of(5, {1}), VertexSet::of(5, {2, 3, 4}), std::nullopt};
    auto k5 = compress(k(5), 1, 1, 0, VertexSet::of(5, {0}), k4q);
    REQUIRE(k5.solution);
    CHECK(k5.solution->deleted.empty());
    CHECK(verify_solution(k(5), 1, 1, 0, *k5.solution));

    auto q = ICPartition{VertexSet::of(4, {1, 3}), VertexSet(4), std::nullopt};
    auto res = compress(two_k2(), 1, 1, 1, VertexSet::of(4, {0, 2}), q);
    REQUIRE(res.solution);
    CHECK(res.solution->deleted.count() == 1);
    CHECK(verify_solution(two_k2(), 1, 1, 1, *res.solution));

    CHECK_THROWS_AS(compress(two_k2(), 1, 1, 0, VertexSet::of(4, {0, 1, 2}), sides(4, VertexSet(4))), ContractViolation);
    auto bad = ICPartition{VertexSet::of(4, {2, 3}), VertexSet::of(4, {1}), std::nullopt};
    CHECK_THROWS_AS(compress(two_k2(), 1, 1, 1, VertexSet::of(4, {0}), bad), ContractViolation);
}

TEST_CASE("solve examples")
{
    auto a = solve(c4(), 2, 0, 0);
    REQUIRE(a.solution);
    CHECK(a.solution->deleted.empty());
    CHECK(verify_solution(c4(), 2, 0, 0, *a.solution));

    auto b = solve(two_k2(), 1, 1, 1);
    REQUIRE(b.solution);
    CHECK(b.solution->deleted.count() == 1);
    CHECK(verify_solution(two_k2(), 1, 1, 1, *b.solution));
    CHECK_FALSE(solve(two_k2(), 1, 1, 0).solution);

    auto fig1 = build_instance(fig1_formula()).graph;
    auto c = solve(fig1, 2, 1, 0);
    REQUIRE(c.solution);
    CHECK(c.solution->deleted.empty());
    CHECK(verify_solution(fig1, 2, 1, 0, *c.solution));
}

TEST_CASE("solve on tiny graphs deletes the highest vertices")
{
    auto res = solve(edgeless(4), 1, 1, 2);
    REQUIRE(res.solution);
    CHECK(res.solution->deleted == VertexSet::of(4, {2, 3}));
    CHECK(verify_solution(edgeless(4), 1, 1, 2, *res.solution));
    CHECK(res.runs.empty());
}

TEST_CASE("recognize examples")
{
    auto p = recognize(p3(), 1, 1);
    REQUIRE(p);
    CHECK(verify_partition(p3(), 1, 1, VertexSet(3), *p));
    CHECK_FALSE(recognize(c4(), 1, 1));
    CHECK_FALSE(recognize(edgeless(3), 0, 0));
    CHECK(recognize(Graph(0), 0, 0));
}

TEST_CASE("verify_solution examples")
{
    Solution sol{VertexSet(4),
                 {VertexSet::full(4), VertexSet(4),
                  Refinement{{VertexSet::of(4, {0, 2}), VertexSet::of(4, {1, 3})}, {}}},
                 {}};
    CHECK(verify_solution(c4(), 2, 0, 0, sol));

    auto moved = sol;
    moved.partition.refinement->independent = {VertexSet::of(4, {0, 1, 2}), VertexSet::of(4, {3})};
    CHECK_FALSE(verify_solution(c4(), 2, 0, 0, moved));

    auto oversized = sol;
    oversized.deleted = VertexSet::of(4, {3});
    oversized.partition.independent_side = VertexSet::of(4, {0, 1, 2});
    oversized.partition.refinement->independent = {VertexSet::of(4, {0, 2}), VertexSet::of(4, {1})};
    CHECK(verify_solution(c4(), 2, 0, 1, oversized));
    CHECK_FALSE(verify_solution(c4(), 2, 0, 0, oversized));

    auto uncovered = sol;
    uncovered.partition.independent_side = VertexSet::of(4, {0, 1, 2});
    uncovered.partition.refinement->independent = {VertexSet::of(4, {0, 2}), VertexSet::of(4, {1})};
    CHECK_FALSE(verify_solution(c4(), 2, 0, 0, uncovered));
}

TEST_CASE("short search finds a solution exactly when one exists within the budgets")
{
    Rng rng(23);
    int yes = 0;
    for (int t = 0; t < 400; ++t) {
        int n = rng.uniform(1, 7);
        Graph g = t % 2 ? random_perfect(n, rng.unit(), rng) : random_chordal(n, rng);
        SolveParams p{rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0, 4)};
        VertexSet second(n);
        for (int v = 0; v < n; ++v)
            if (rng.bernoulli(0.5))
                second.set(v);
        auto q = sides(n, second);
        auto res = short_vertex_partization(g, p, q);
        CHECK(res.solution.has_value() == brute_short(g, p, q));
        CHECK(checks::within_bounds(res.stats, p));
        if (!res.solution)
            continue;
        ++yes;
        CHECK(verify_solution(g, p.r, p.l, p.k, *res.solution));
        auto kept = VertexSet::full(n) - res.solution->deleted;
        CHECK(hamming(LabelVector::of(res.solution->partition, kept), LabelVector::of(q, kept)) <= p.rho);
    }
    CHECK(yes > 50);
}

TEST_CASE("failure memo never changes the answer or the certificate")
{
    SearchOptions plain;
    plain.memoize_failures = false;
    for (const auto& item : small_corpus(25))
        for (int r = 0; r <= 2; ++r)
            for (int l = 0; l <= 2; ++l) {
                auto a = solve(item.graph, r, l, 1);
                auto b = solve(item.graph, r, l, 1, plain);
                REQUIRE(a.solution.has_value() == b.solution.has_value());
                if (a.solution) {
                    CHECK(a.solution->deleted == b.solution->deleted);
                    CHECK(a.solution->partition.clique_side == b.solution->partition.clique_side);
                }
                CHECK(a.total.nodes <= b.total.nodes);
            }
}

TEST_CASE("solve matches brute force, stays within the branching bounds, and is monotone")
{
    for (const auto& item : small_corpus(25))
        for (int r = 0; r <= 2; ++r)
            for (int l = 0; l <= 2; ++l)
                for (int k = 0; k <= 2; ++k) {
                    const auto& g = item.graph;
                    auto rep = solve(g, r, l, k);
                    CHECK(rep.solution.has_value() == brute_min_deletion(g, r, l, k).has_value());
                    for (const auto& run : rep.runs)
                        CHECK(checks::within_bounds(run.stats, run.params));
                    if (!rep.solution)
                        continue;
                    CHECK(verify_solution(g, r, l, k, *rep.solution));
                    CHECK(solve(g, r, l, k + 1).solution);
                    CHECK(solve(g, r + 1, l, k).solution);
                    CHECK(solve(g, r, l + 1, k).solution);
                }
}

TEST_CASE("solutions on larger bipartite and chordal graphs verify")
{
    Rng rng(99);
    for (int t = 0; t < 60; ++t) {
        int n = rng.uniform(11, 30);
        Graph g = t % 2 ? random_chordal(n, rng) : random_bipartite(n / 2, n - n / 2, 0.3, rng);
        int r = rng.uniform(0, 2);
        int l = rng.uniform(0, 2);
        int k = rng.uniform(0, 2);
        auto rep = solve(g, r, l, k);
        if (rep.solution)
            CHECK(verify_solution(g, r, l, k, *rep.solution));
        for (const auto& run : rep.runs)
            CHECK(checks::within_bounds(run.stats, run.params));
    }
}

TEST_CASE("hamming bound between IC-partitions holds on perfect graphs")
{
    long pairs = 0;
    long bad = 0;
    for (int n = 0; n <= 8; ++n)
        for (const auto& g : enumerate_graphs(n))
            if (!find_odd_hole_or_antihole(g))
                bad += checks::hamming_bound_violations(g, &pairs);
    CHECK(bad == 0);
    CHECK(pairs > 0);
}
