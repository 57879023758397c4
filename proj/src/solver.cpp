#include "partize/solver.hpp"

#include "partize/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace partize {

LabelVector LabelVector::of(const ICPartition& p, const VertexSet& over)
{
    std::vector<bool> bits;
    bits.reserve(over.count());
    over.for_each([&](int v) {
        bool first = p.independent_side.test(v);
        bool second = p.clique_side.test(v);
        if (first == second)
            throw ContractViolation("LabelVector: vertex " + std::to_string(v) + " is not on exactly one side");
        bits.push_back(second);
    });
    return LabelVector(std::move(bits));
}

int hamming(const LabelVector& a, const LabelVector& b)
{
    if (a.size() != b.size())
        throw ContractViolation("hamming: length mismatch (" + std::to_string(a.size()) + " vs "
                                + std::to_string(b.size()) + ")");
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += a[i] != b[i];
    return d;
}

SearchStats& SearchStats::operator+=(const SearchStats& other)
{
    nodes += other.nodes;
    depth = std::max(depth, other.depth);
    return *this;
}

namespace {

struct StateKey {
    VertexSet deleted;
    VertexSet first_side;
    int k;
    int rho;
    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& s) const noexcept
    {
        std::size_t h = s.deleted.hash();
        h ^= s.first_side.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<int>{}(s.k * 1024 + s.rho) + (h << 6) + (h >> 2);
        return h;
    }
};

std::vector<VertexSet> lift_all(const InducedSubgraph& sub, const std::vector<VertexSet>& blocks)
{
    std::vector<VertexSet> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks)
        out.push_back(sub.lift(b));
    return out;
}

class ShortSearch {
public:
    ShortSearch(const Graph& g, const SolveParams& params, const SearchOptions& opts)
        : g_(g)
        , params_(params)
        , opts_(opts)
    {
    }

    std::optional<Solution> visit(const VertexSet& deleted, const VertexSet& q1, const VertexSet& q2, int k,
                                  int rho, int depth)
    {
        if (k < 0 || rho < 0)
            return std::nullopt;
        ++stats_.nodes;
        stats_.depth = std::max(stats_.depth, depth);
        StateKey key{deleted, q1, k, rho};
        if (opts_.memoize_failures && failed_.contains(key))
            return std::nullopt;

        auto result = expand(deleted, q1, q2, k, rho, depth);
        if (!result && opts_.memoize_failures)
            failed_.insert(std::move(key));
        return result;
    }

    const SearchStats& stats() const { return stats_; }

private:
    std::optional<Solution> expand(const VertexSet& deleted, const VertexSet& q1, const VertexSet& q2, int k,
                                   int rho, int depth)
    {
        auto first = induced_subgraph(g_, q1);
        auto colored = color_or_clique(first.graph, params_.r, opts_.oracle);
        if (!colored.is_partition()) {
            auto clique = first.lift(colored.witness()).members();
            for (int v : clique)
                if (auto s = visit(deleted.with(v), q1.without(v), q2, k - 1, rho, depth + 1)) {
                    return s;
                }
            for (int v : clique)
                if (auto s = visit(deleted, q1.without(v), q2.with(v), k, rho - 1, depth + 1))
                    return s;
            return std::nullopt;
        }

        auto second = induced_subgraph(g_, q2);
        auto covered = cover_or_independent(second.graph, params_.l, opts_.oracle);
        if (covered.is_partition()) {
            Refinement refinement{lift_all(first, colored.blocks()), lift_all(second, covered.blocks())};
            return Solution{deleted, ICPartition{q1, q2, std::move(refinement)}, {}};
        }

        auto independent = second.lift(covered.witness()).members();
        for (int v : independent)
            if (auto s = visit(deleted.with(v), q1, q2.without(v), k - 1, rho, depth + 1))
                return s;
        for (int v : independent)
            if (auto s = visit(deleted, q1.with(v), q2.without(v), k, rho - 1, depth + 1))
                return s;
        return std::nullopt;
    }

    const Graph& g_;
    SolveParams params_;
    const SearchOptions& opts_;
    SearchStats stats_;
    std::unordered_set<StateKey, StateKeyHash> failed_;
};

void require_partition_of(const Graph& g, const ICPartition& q, const VertexSet& outside, const char* who)
{
    const int n = g.n();
    if (q.independent_side.universe() != n || q.clique_side.universe() != n || outside.universe() != n)
        throw ContractViolation(std::string(who) + ": vertex sets do not match the graph size");
    if (q.independent_side.intersects(q.clique_side))
        throw ContractViolation(std::string(who) + ": partition sides overlap");
    if (q.covered().intersects(outside) || (q.covered() | outside) != VertexSet::full(n))
        throw ContractViolation(std::string(who) + ": partition does not cover the remaining vertices exactly");
}

ICPartition resized(const ICPartition& p, int universe)
{
    ICPartition out{p.independent_side.resized(universe), p.clique_side.resized(universe), std::nullopt};
    if (p.refinement) {
        Refinement r;
        for (const auto& b : p.refinement->independent)
            r.independent.push_back(b.resized(universe));
        for (const auto& b : p.refinement->cliques)
            r.cliques.push_back(b.resized(universe));
        out.refinement = std::move(r);
    }
    return out;
}

Verdict fail(std::string reason) { return Verdict{false, std::move(reason)}; }

Verdict check_blocks(const Graph& g, const std::vector<VertexSet>& blocks, const VertexSet& side, bool cliques)
{
    VertexSet seen(g.n());
    for (const auto& b : blocks) {
        if (b.universe() != g.n())
            return fail("block universe does not match the graph");
        if (b.intersects(seen))
            return fail("blocks overlap at " + (b & seen).to_string());
        seen |= b;
        if (cliques && !is_clique(g, b))
            return fail("clique block " + b.to_string() + " is not a clique");
        if (!cliques && !is_independent(g, b))
            return fail("independent block " + b.to_string() + " is not independent");
    }
    if (seen != side)
        return fail(std::string(cliques ? "clique" : "independent") + " blocks do not cover their side exactly");
    return {};
}

} // namespace

ShortResult short_vertex_partization(const Graph& g, const SolveParams& params, const ICPartition& q,
                                     const SearchOptions& opts)
{
    if (params.r < 0 || params.l < 0)
        throw ContractViolation("short_vertex_partization: r and l must be non-negative");
    require_partition_of(g, q, VertexSet(g.n()), "short_vertex_partization");
    ShortSearch search(g, params, opts);
    auto solution = search.visit(VertexSet(g.n()), q.independent_side, q.clique_side, params.k, params.rho, 1);
    if (solution)
        solution->stats = search.stats();
    return ShortResult{std::move(solution), search.stats()};
}

int compression_budget(int r, int l, int k) { return (r + k + 1) * l + r * l; }

ShortResult compress(const Graph& g, int r, int l, int k, const VertexSet& s_prev, const ICPartition& q,
                     const SearchOptions& opts)
{
    if (r < 0 || l < 0 || k < 0)
        throw ContractViolation("compress: r, l, k must be non-negative");
    if (s_prev.count() > k + 1)
        throw ContractViolation("compress: previous deletion set has " + std::to_string(s_prev.count())
                                + " vertices, expected at most k+1 = " + std::to_string(k + 1));
    require_partition_of(g, q, s_prev, "compress");
    if (q.refinement) {
        if (auto v = verify_partition(g, r, l, s_prev, q); !v)
            throw ContractViolation("compress: starting partition is not a valid IC-partition: " + v.reason);
    } else {
        bool first_ok = color_or_clique(induced_subgraph(g, q.independent_side).graph, r, opts.oracle).is_partition();
        bool second_ok = cover_or_independent(induced_subgraph(g, q.clique_side).graph, l, opts.oracle).is_partition();
        if (!first_ok || !second_ok)
            throw ContractViolation("compress: starting partition is not a valid IC-partition");
    }
    ICPartition start{q.independent_side | s_prev, q.clique_side, std::nullopt};
    SolveParams params{r, l, k, compression_budget(r, l, k)};
    return short_vertex_partization(g, params, start, opts);
}

SolveReport solve(const Graph& g, int r, int l, int k, const SearchOptions& opts)
{
    if (r < 0 || l < 0 || k < 0)
        throw ContractViolation("solve: r, l, k must be non-negative");
    const int n = g.n();
    SolveReport report;

    if (n <= r + l + k) {
        int keep = std::min(n, r + l);
        Solution sol{VertexSet::range(n, keep, n), {VertexSet(n), VertexSet(n), Refinement{}}, {}};
        for (int v = 0; v < keep; ++v) {
            auto single = VertexSet::of(n, {v});
            if (v < r) {
                sol.partition.independent_side.set(v);
                sol.partition.refinement->independent.push_back(single);
            } else {
                sol.partition.clique_side.set(v);
                sol.partition.refinement->cliques.push_back(single);
            }
        }
        report.solution = std::move(sol);
        return report;
    }

    const int start = r + l + k + 1;
    VertexSet s_prev = VertexSet::range(start, 0, k + 1);
    ICPartition q{VertexSet::range(start, k + 1, k + 1 + r), VertexSet::range(start, k + 1 + r, start), Refinement{}};
    for (int v = k + 1; v < start; ++v)
        (v < k + 1 + r ? q.refinement->independent : q.refinement->cliques).push_back(VertexSet::of(start, {v}));

    for (int i = start; i <= n; ++i) {
        Graph prefix = induced_subgraph(g, VertexSet::range(n, 0, i)).graph;
        auto result = compress(prefix, r, l, k, s_prev, q, opts);
        report.runs.push_back(
            CompressionRun{i, SolveParams{r, l, k, compression_budget(r, l, k)}, result.stats, result.solution.has_value()});
        report.total += result.stats;
        if (!result.solution)
            return report;
        if (i == n) {
            report.solution = std::move(result.solution);
            report.solution->stats = report.total;
            break;
        }
        s_prev = result.solution->deleted.resized(i + 1).with(i);
        q = resized(result.solution->partition, i + 1);
    }
    return report;
}

std::optional<ICPartition> recognize(const Graph& g, int r, int l, const SearchOptions& opts)
{
    auto report = solve(g, r, l, 0, opts);
    if (!report.solution)
        return std::nullopt;
    return std::move(report.solution->partition);
}

Verdict verify_partition(const Graph& g, int r, int l, const VertexSet& deleted, const ICPartition& p)
{
    const int n = g.n();
    if (deleted.universe() != n || p.independent_side.universe() != n || p.clique_side.universe() != n)
        return fail("vertex sets do not match the graph size");
    if (p.independent_side.intersects(p.clique_side))
        return fail("partition sides overlap");
    if (p.covered().intersects(deleted))
        return fail("a deleted vertex also appears in the partition");
    if ((p.covered() | deleted) != VertexSet::full(n))
        return fail("vertices " + (VertexSet::full(n) - p.covered() - deleted).to_string()
                    + " are neither deleted nor partitioned");
    if (!p.refinement)
        return fail("partition carries no refinement");
    const auto& ref = *p.refinement;
    if (static_cast<int>(ref.independent.size()) > r)
        return fail(std::to_string(ref.independent.size()) + " independent blocks exceed r = " + std::to_string(r));
    if (static_cast<int>(ref.cliques.size()) > l)
        return fail(std::to_string(ref.cliques.size()) + " clique blocks exceed l = " + std::to_string(l));
    if (auto v = check_blocks(g, ref.independent, p.independent_side, false); !v)
        return v;
    return check_blocks(g, ref.cliques, p.clique_side, true);
}

Verdict verify_solution(const Graph& g, int r, int l, int k, const Solution& sol)
{
    if (sol.deleted.universe() == g.n() && sol.deleted.count() > k)
        return fail("deletion set has " + std::to_string(sol.deleted.count()) + " vertices, budget is "
                    + std::to_string(k));
    return verify_partition(g, r, l, sol.deleted, sol.partition);
}

} // namespace partize
