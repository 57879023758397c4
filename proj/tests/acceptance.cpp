// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "checks.hpp"
#include "fixtures.hpp"

#include "partize/brute.hpp"
#include "partize/canonical.hpp"
#include "partize/generators.hpp"
#include "partize/holes.hpp"
#include "partize/kernel.hpp"
#include "partize/oracles.hpp"
#include "partize/sat_reduction.hpp"
#include "partize/solver.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

using namespace partize;
using namespace fixtures;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Outcome& o)
{
    std::printf("criterion %d [%s]: %s (%s)\n", id, title, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass)
        ++failures;
}

Outcome guarded(const std::function<Outcome()>& body)
{
    try {
        return body();
    } catch (const std::exception& e) {
        return {false, std::string("exception: ") + e.what()};
    }
}

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

struct CorpusRun {
    long instances = 0;
    long disagreements = 0;
    long yes = 0;
    long bad_certificates = 0;
    long compressions = 0;
    long bound_violations = 0;
    double seconds = 0;
    int graphs = 0;
};

CorpusRun run_corpus(const std::vector<CorpusGraph>& corpus, const SearchOptions& opts = {}, bool with_brute = true)
{
    CorpusRun out;
    out.graphs = static_cast<int>(corpus.size());
    auto start = std::chrono::steady_clock::now();
    for (const auto& item : corpus)
        for (int r = 0; r <= 2; ++r)
            for (int l = 0; l <= 2; ++l)
                for (int k = 0; k <= 3; ++k) {
                    ++out.instances;
                    auto rep = solve(item.graph, r, l, k, opts);
                    bool brute = with_brute ? brute_min_deletion(item.graph, r, l, k).has_value() : rep.solution.has_value();
                    if (rep.solution.has_value() != brute) {
                        ++out.disagreements;
                        std::fprintf(stderr, "disagreement: %s seed %llu (r,l,k)=(%d,%d,%d)\n", item.kind.c_str(),
                                     static_cast<unsigned long long>(item.seed), r, l, k);
                    }
                    if (rep.solution) {
                        ++out.yes;
                        if (!verify_solution(item.graph, r, l, k, *rep.solution))
                            ++out.bad_certificates;
                    }
                    for (const auto& run : rep.runs) {
                        ++out.compressions;
                        if (!checks::within_bounds(run.stats, run.params))
                            ++out.bound_violations;
                    }
                }
    out.seconds = seconds_since(start);
    return out;
}

// Hammer-Simeone: with degrees sorted descending and m = max{i : d_i >= i-1},
// g is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
bool degree_split(const Graph& g)
{
    std::vector<int> d;
    for (int v = 0; v < g.n(); ++v)
        d.push_back(g.degree(v));
    std::sort(d.rbegin(), d.rend());
    int m = 0;
    for (int i = 1; i <= g.n(); ++i)
        if (d[i - 1] >= i - 1)
            m = i;
    long lhs = 0, rhs = static_cast<long>(m) * (m - 1);
    for (int i = 0; i < g.n(); ++i)
        (i < m ? lhs : rhs) += d[i];
    return lhs == rhs;
}

// Smallest |S| passing `ok` on g - S.
int min_deletion(const Graph& g, const std::function<bool(const Graph&)>& ok)
{
    const int n = g.n();
    int best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) < best && ok(delete_vertices(g, checks::from_mask(n, mask)).graph))
            best = std::popcount(mask);
    return best;
}

} // namespace

int main()
{
    auto corpus = small_corpus(170);
    CorpusRun run;
    auto corpus_outcome = guarded([&] {
        run = run_corpus(corpus);
        return Outcome{};
    });

    report(1, "solver agrees with brute-force deletion", guarded([&]() -> Outcome {
               if (!corpus_outcome.detail.empty())
                   return corpus_outcome;
               bool ok = run.graphs >= 500 && run.disagreements == 0 && run.seconds < 600;
               return {ok, std::to_string(run.graphs) + " graphs, " + std::to_string(run.instances) + " instances, "
                               + std::to_string(run.disagreements) + " disagreements, "
                               + std::to_string(static_cast<int>(std::round(run.seconds))) + " s"};
           }));

    report(2, "every yes certificate verifies", guarded([&]() -> Outcome {
               if (!corpus_outcome.detail.empty())
                   return corpus_outcome;
               return {run.yes > 0 && run.bad_certificates == 0,
                       std::to_string(run.yes) + " certificates, " + std::to_string(run.bad_certificates) + " rejected"};
           }));

    report(3, "branching node and depth bounds", guarded([&]() -> Outcome {
               if (!corpus_outcome.detail.empty())
                   return corpus_outcome;
               SearchOptions plain;
               plain.memoize_failures = false;
               auto tree = run_corpus(corpus, plain, false);
               return {run.compressions > 0 && run.bound_violations == 0 && tree.bound_violations == 0,
                       std::to_string(run.compressions) + " searches, " + std::to_string(run.bound_violations)
                           + " violations; without failure memo " + std::to_string(tree.bound_violations)
                           + " violations"};
           }));

    report(4, "hamming bound between IC-partitions", guarded([]() -> Outcome {
               long graphs = 0, pairs = 0, bad = 0;
               for (int n = 0; n <= 7; ++n)
                   for (const auto& g : enumerate_graphs(n)) {
                       if (find_odd_hole_or_antihole(g))
                           continue;
                       ++graphs;
                       bad += checks::hamming_bound_violations(g, &pairs);
                   }
               return {bad == 0 && graphs > 0, std::to_string(graphs) + " perfect graphs, " + std::to_string(pairs)
                                                  + " partition pairs, " + std::to_string(bad) + " violations"};
           }));

    report(5, "CNF reduction preserves satisfiability", guarded([]() -> Outcome {
               long formulas = 0, disagreements = 0, audited = 0, imperfect = 0, sat = 0;
               for (int i = 0; i < 300; ++i) {
                   Rng rng(7000 + i);
                   int n = rng.uniform(1, 5);
                   auto phi = random_cnf(n, rng.uniform(0, 6), 1, 3, rng);
                   auto inst = build_instance(phi);
                   ++formulas;
                   bool s = brute_sat(phi).has_value();
                   sat += s;
                   if (s != brute_rl_partition(inst.graph, n, 1).has_value())
                       ++disagreements;
                   if (inst.graph.n() <= 14) {
                       ++audited;
                       if (audit_perfect(inst))
                           ++imperfect;
                   }
               }
               return {formulas >= 200 && disagreements == 0 && imperfect == 0,
                       std::to_string(formulas) + " formulas (" + std::to_string(sat) + " satisfiable), "
                           + std::to_string(disagreements) + " disagreements, " + std::to_string(audited)
                           + " audited, " + std::to_string(imperfect) + " imperfect"};
           }));

    report(6, "two-variable gadget instance", guarded([]() -> Outcome {
               auto inst = build_instance(fig1_formula());
               const Graph drawn(8, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4},
                                     {2, 5}, {0, 6}, {0, 7}, {2, 6}, {3, 6}, {2, 7}, {3, 7}});
               bool shape = inst.graph.n() == 8 && inst.graph.edge_count() == 14 && inst.graph == drawn;
               auto rep = solve(inst.graph, 2, 1, 0);
               bool yes = rep.solution && rep.solution->deleted.empty() && verify_solution(inst.graph, 2, 1, 0, *rep.solution);
               bool sat = yes && satisfies(assignment_from_partition(inst, rep.solution->partition), inst.formula);
               return {shape && yes && sat, std::string("8 vertices/14 edges as expected: ") + (shape ? "yes" : "no")
                                                + ", solve (2,1,0): " + (yes ? "yes" : "no")
                                                + ", recovered assignment satisfies: " + (sat ? "yes" : "no")};
           }));

    report(7, "forbidden families", guarded([]() -> Outcome {
               auto minimal = [](const ForbiddenFamily& f) {
                   for (const auto& h : f.members) {
                       if (is_rl_split(h, f.r, f.l))
                           return false;
                       for (int v = 0; v < h.n(); ++v)
                           if (!is_rl_split(delete_vertices(h, VertexSet::of(h.n(), {v})).graph, f.r, f.l))
                               return false;
                   }
                   return true;
               };
               auto same = [](const ForbiddenFamily& f, std::vector<Graph> want) {
                   if (f.members.size() != want.size())
                       return false;
                   for (const auto& w : want)
                       if (std::none_of(f.members.begin(), f.members.end(), [&](const Graph& m) { return isomorphic(m, w); }))
                           return false;
                   return true;
               };
               auto split = enumerate_forbidden_family(1, 1, 5);
               auto edgeless_family = enumerate_forbidden_family(1, 0, 3);
               auto triangle_free = enumerate_forbidden_family(2, 0, 4);
               bool a = same(split, {two_k2(), c4(), c5()}) && minimal(split);
               bool b = same(edgeless_family, {k(2)}) && minimal(edgeless_family);
               bool c = same(triangle_free, {k(3)}) && minimal(triangle_free);
               return {a && b && c, std::string("(1,1,5)={2K2,C4,C5}: ") + (a ? "yes" : "no") + ", (1,0,3)={K2}: "
                                        + (b ? "yes" : "no") + ", (2,0,4)={K3}: " + (c ? "yes" : "no")};
           }));

    report(8, "kernel pipeline", guarded([]() -> Outcome {
               auto fam = enumerate_forbidden_family(1, 1, 5);
               int planted_runs = 0, planted_bad = 0;
               for (int i = 0; i < 120; ++i) {
                   Rng rng(8000 + i);
                   int k = rng.uniform(0, 4);
                   int n = rng.uniform(std::max(k + 1, 8), 30);
                   auto inst = planted(1, 1, k, n, 0.2 + 0.6 * rng.unit(), rng);
                   // also ask with one less budget, where the answer may be no
                   for (int budget : {k, std::max(0, k - 1)}) {
                       ++planted_runs;
                       bool direct = solve(inst.graph, 1, 1, budget).solution.has_value();
                       bool kernel = solve_via_kernel(inst.graph, 1, 1, budget, fam).has_value();
                       if (direct != kernel || (budget == k && !direct))
                           ++planted_bad;
                   }
               }
               int systems = 0, system_bad = 0;
               for (int i = 0; i < 300; ++i) {
                   Rng rng(9000 + i);
                   SetSystem sys;
                   sys.universe = rng.uniform(1, 12);
                   sys.d = rng.uniform(1, 4);
                   int k = rng.uniform(0, 3);
                   int count = rng.uniform(0, 20);
                   for (int j = 0; j < count; ++j) {
                       VertexSet s(sys.universe);
                       int size = rng.uniform(1, std::min(sys.d, sys.universe));
                       while (s.count() < size)
                           s.set(rng.uniform(0, sys.universe - 1));
                       sys.sets.push_back(s);
                   }
                   ++systems;
                   auto kern = sunflower_kernel(sys, k, sys.d);
                   bool kernel_yes = !kern.infeasible && branch_hitting_set(kern.system, kern.k).has_value();
                   if (kernel_yes != brute_hitting_set(sys.universe, sys.sets, k).has_value())
                       ++system_bad;
               }
               return {planted_runs >= 100 && systems >= 200 && planted_bad == 0 && system_bad == 0,
                       std::to_string(planted_runs) + " planted runs, " + std::to_string(planted_bad) + " mismatches; "
                           + std::to_string(systems) + " set systems, " + std::to_string(system_bad) + " mismatches"};
           }));

    report(9, "special cases", guarded([&]() -> Outcome {
               long vc = 0, vc_bad = 0, split = 0, split_bad = 0, bip = 0, bip_bad = 0;
               for (const auto& item : corpus) {
                   const auto& g = item.graph;
                   int cover = min_deletion(g, [](const Graph& h) { return h.edge_count() == 0; });
                   int split_del = min_deletion(g, degree_split);
                   for (int k = 0; k <= 3; ++k) {
                       ++vc;
                       vc_bad += solve(g, 1, 0, k).solution.has_value() != (cover <= k);
                       ++split;
                       split_bad += solve(g, 1, 1, k).solution.has_value() != (split_del <= k);
                   }
                   if (item.kind == "bipartite") {
                       ++bip;
                       bip_bad += !solve(g, 2, 0, 0).solution.has_value();
                   }
               }
               return {vc_bad == 0 && split_bad == 0 && bip_bad == 0 && bip > 0,
                       "vertex cover " + std::to_string(vc - vc_bad) + "/" + std::to_string(vc) + ", split deletion "
                           + std::to_string(split - split_bad) + "/" + std::to_string(split) + ", bipartite k=0 "
                           + std::to_string(bip - bip_bad) + "/" + std::to_string(bip)};
           }));

    std::printf("acceptance: %s\n", failures == 0 ? "ALL PASS" : (std::to_string(failures) + " FAILED").c_str());
    return failures == 0 ? 0 : 1;
}
