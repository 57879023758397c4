#include "doctest.h"
#include "fixtures.hpp"

#include "partize/brute.hpp"
#include "partize/canonical.hpp"
#include "partize/dimacs.hpp"
#include "partize/errors.hpp"
#include "partize/holes.hpp"
#include "partize/io.hpp"

#include <algorithm>
#include <numeric>

using namespace partize;
using namespace fixtures;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm)
{
    GraphBuilder b(g.n());
    for (auto [u, v] : g.edges())
        b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

std::vector<int> random_perm(int n, Rng& rng)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.uniform(0, i)]);
    return perm;
}

} // namespace

TEST_CASE("vertex set basics")
{
    auto s = VertexSet::of(70, {1, 5, 64, 69});
    CHECK(s.count() == 4);
    CHECK(s.first() == 1);
    CHECK(s.next(5) == 64);
    CHECK(s.next(69) == -1);
    CHECK(s.members() == std::vector<int>{1, 5, 64, 69});
    CHECK((~s).count() == 66);
    CHECK((s - VertexSet::of(70, {5})).to_string() == "{1,64,69}");
    CHECK(VertexSet::range(10, 2, 5).members() == std::vector<int>{2, 3, 4});
    CHECK(VertexSet::of(4, {1}).is_subset_of(VertexSet::of(4, {1, 2})));
    CHECK_THROWS_AS(s | VertexSet(3), ContractViolation);
    CHECK_THROWS_AS(VertexSet(3).set(3), ContractViolation);
}

TEST_CASE("parse_dimacs examples")
{
    auto g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3");
    CHECK(g == path_graph(3));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    auto h = parse_dimacs("p edge 2 0");
    CHECK(h.n() == 2);
    CHECK(h.edge_count() == 0);

    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3"), ParseError);
}

TEST_CASE("parse_dimacs errors carry line numbers")
{
    try {
        parse_dimacs("c hello\np edge 2 1\ne 1 3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_dimacs("e 1 2\np edge 2 1"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 1"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p graph 2 1"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\nx 1 2"), ParseError);
    CHECK_NOTHROW(parse_dimacs("c comment\np col 3 1\ne 1 3\n"));
}

TEST_CASE("dimacs round trip is a fixed point")
{
    for (const auto& item : small_corpus(20)) {
        auto text = write_dimacs(item.graph);
        auto again = parse_dimacs(text);
        CHECK(again == item.graph);
        CHECK(write_dimacs(again) == text);
    }
}

TEST_CASE("graph json round trip")
{
    auto g = diamond();
    auto doc = graph_to_json(g);
    CHECK(doc.dump() == R"({"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3]]})");
    CHECK(graph_from_json(doc) == g);
    CHECK(read_graph(doc.dump()) == g);
    CHECK_THROWS_AS(read_graph(R"({"n":2,"edges":[[0,2]]})"), ParseError);
}

TEST_CASE("complement examples")
{
    CHECK(complement(c4()).edges() == std::vector<Edge>{{0, 2}, {1, 3}});
    CHECK(complement(k(3)).edge_count() == 0);
    CHECK(complement(k(3)).n() == 3);
}

TEST_CASE("induced subgraph examples")
{
    auto sub = induced_subgraph(c4(), VertexSet::of(4, {0, 1, 2}));
    CHECK(sub.graph == path_graph(3));
    CHECK(sub.to_host == std::vector<int>{0, 1, 2});

    auto g = diamond();
    auto whole = induced_subgraph(g, g.vertices());
    CHECK(whole.graph == g);
    CHECK(whole.to_host == std::vector<int>{0, 1, 2, 3});

    CHECK(induced_subgraph(k(4), VertexSet::of(4, {0, 1})).graph == k(2));

    auto del = delete_vertices(c5(), VertexSet::of(5, {0}));
    CHECK(del.graph == path_graph(4));
    CHECK(del.to_host == std::vector<int>{1, 2, 3, 4});
    CHECK(del.from_host[0] == -1);
}

TEST_CASE("clique and independence examples")
{
    CHECK(is_clique(k(3), VertexSet::of(3, {0, 1, 2})));
    CHECK(is_independent(k(3), VertexSet::of(3, {0})));
    CHECK_FALSE(is_clique(c4(), VertexSet::of(4, {0, 1, 2})));
}

TEST_CASE("complement is an involution and swaps cliques with independent sets")
{
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        int n = rng.uniform(0, 10);
        auto g = random_gnp(n, rng.unit(), rng);
        auto co = complement(g);
        CHECK(complement(co) == g);
        for (std::uint32_t mask = 0; mask < (1u << n); mask += 1 + rng.uniform(0, 7)) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1u)
                    s.set(v);
            CHECK(is_clique(g, s) == is_independent(co, s));
        }
    }
}

TEST_CASE("graph builder rejects loops and bad endpoints")
{
    GraphBuilder b(3);
    CHECK_THROWS_AS(b.add_edge(1, 1), ContractViolation);
    CHECK_THROWS_AS(b.add_edge(0, 3), ContractViolation);
}

TEST_CASE("odd hole examples")
{
    auto cert = find_odd_hole_or_antihole(c5());
    REQUIRE(cert);
    CHECK(cert->kind == HoleKind::hole);
    CHECK(cert->cycle == std::vector<int>{0, 1, 2, 3, 4});

    CHECK_FALSE(find_odd_hole_or_antihole(c4()));

    auto anti = find_odd_hole_or_antihole(complement(cycle_graph(7)));
    REQUIRE(anti);
    CHECK(anti->kind == HoleKind::antihole);
    CHECK(anti->cycle.size() == 7);
    CHECK(is_valid_certificate(complement(cycle_graph(7)), *anti));

    auto seven = find_odd_hole(cycle_graph(7));
    REQUIRE(seven);
    CHECK(seven->size() == 7);
    CHECK_FALSE(find_odd_hole(cycle_graph(6)));
}

TEST_CASE("hole search is complement-symmetric on every graph up to 8 vertices")
{
    for (int n = 0; n <= 8; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            auto co = complement(g);
            auto a = find_odd_hole_or_antihole(g);
            auto b = find_odd_hole_or_antihole(co);
            REQUIRE(a.has_value() == b.has_value());
            if (!a)
                continue;
            CHECK(is_valid_certificate(g, *a));
            CHECK(is_valid_certificate(co, *b));
            auto swapped = *a;
            swapped.kind = a->kind == HoleKind::hole ? HoleKind::antihole : HoleKind::hole;
            CHECK(is_valid_certificate(co, swapped));
        }
}

TEST_CASE("hole search agrees with chi = omega on all induced subgraphs")
{
    for (int n = 0; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n))
            CHECK(!find_odd_hole_or_antihole(g).has_value() == brute_is_perfect(g));
}

TEST_CASE("graph counts match the number of isomorphism classes")
{
    const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 0; n <= 8; ++n)
        CHECK(enumerate_graphs(n).size() == expected[n]);
}

TEST_CASE("canonical form is relabeling invariant")
{
    Rng rng(5);
    for (int t = 0; t < 300; ++t) {
        int n = rng.uniform(0, kMaxCanonicalVertices);
        auto g = random_gnp(n, rng.unit(), rng);
        auto h = relabel(g, random_perm(n, rng));
        auto cg = canonical_form(g);
        CHECK(cg == canonical_form(h));
        CHECK(canonical_form(graph_from_code(n, cg.code)) == cg);
        std::vector<int> inverse(n);
        for (int i = 0; i < n; ++i)
            inverse[cg.order[i]] = i;
        CHECK(relabel(g, inverse) == graph_from_code(n, cg.code));
    }
    CHECK_FALSE(isomorphic(c4(), two_k2()));
    CHECK(isomorphic(complement(c4()), two_k2()));
    CHECK(isomorphic(c5(), complement(c5())));
}
