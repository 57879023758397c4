#include "partize/kernel.hpp"

#include "partize/canonical.hpp"
#include "partize/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

namespace partize {

namespace {

// omega and alpha of every induced subgraph, indexed by vertex bitmask.
struct SubsetTables {
    std::vector<std::uint8_t> omega;
    std::vector<std::uint8_t> alpha;
};

SubsetTables subset_tables(const Graph& g)
{
    const int n = g.n();
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        g.neighbors(v).for_each([&](int w) { adj[v] |= 1u << w; });
    const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
    SubsetTables t{std::vector<std::uint8_t>(std::size_t{1} << n, 0), std::vector<std::uint8_t>(std::size_t{1} << n, 0)};
    for (std::uint32_t mask = 1; mask <= all && mask != 0; ++mask) {
        int v = std::countr_zero(mask);
        std::uint32_t rest = mask & (mask - 1);
        t.omega[mask] = std::max<std::uint8_t>(t.omega[rest], 1 + t.omega[rest & adj[v]]);
        t.alpha[mask] = std::max<std::uint8_t>(t.alpha[rest], 1 + t.alpha[rest & ~adj[v]]);
        if (mask == all)
            break;
    }
    return t;
}

bool split_by_tables(const SubsetTables& t, int n, int r, int l, std::uint32_t* witness)
{
    const std::uint32_t all = (n == 0) ? 0 : ((1u << n) - 1);
    for (std::uint32_t second = 0;; ++second) {
        if (t.omega[all & ~second] <= r && t.alpha[second] <= l) {
            if (witness)
                *witness = second;
            return true;
        }
        if (second == all)
            return false;
    }
}

struct MemberIndex {
    // (size, code) -> member id
    std::map<std::pair<int, std::uint64_t>, int> by_code;
    std::set<std::pair<int, int>> size_edges;
};

std::int64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::int64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > (std::int64_t{1} << 60))
            return c;
    }
    return c;
}

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

// Distinct sets, none containing another, in VertexSet order.
std::vector<VertexSet> minimalize(std::vector<VertexSet> sets)
{
    std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.count() != b.count() ? a.count() < b.count() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (auto& s : sets)
        if (std::none_of(kept.begin(), kept.end(), [&](const VertexSet& t) { return t.is_subset_of(s); }))
            kept.push_back(std::move(s));
    std::sort(kept.begin(), kept.end());
    return kept;
}

struct Sunflower {
    VertexSet core;
    std::vector<int> petals;
};

// Erdos-Rado style: a large pairwise-disjoint subfamily, or recurse on the most frequent element.
std::optional<Sunflower> greedy_sunflower(const std::vector<VertexSet>& sets, const std::vector<int>& ids,
                                          int petals, int universe)
{
    if (static_cast<int>(ids.size()) < petals)
        return std::nullopt;
    std::vector<int> disjoint;
    VertexSet used(universe);
    for (int id : ids)
        if (!sets[id].intersects(used)) {
            disjoint.push_back(id);
            used |= sets[id];
        }
    if (static_cast<int>(disjoint.size()) >= petals) {
        disjoint.resize(petals);
        return Sunflower{VertexSet(universe), disjoint};
    }
    std::vector<int> freq(universe, 0);
    for (int id : ids)
        sets[id].for_each([&](int e) { ++freq[e]; });
    int best = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());
    if (freq[best] < petals)
        return std::nullopt;
    std::vector<VertexSet> reduced;
    std::vector<int> reduced_ids;
    std::vector<int> origin;
    for (int id : ids)
        if (sets[id].test(best)) {
            auto rest = sets[id].without(best);
            if (rest.empty())
                return std::nullopt;
            reduced_ids.push_back(static_cast<int>(reduced.size()));
            reduced.push_back(std::move(rest));
            origin.push_back(id);
        }
    auto inner = greedy_sunflower(reduced, reduced_ids, petals, universe);
    if (!inner)
        return std::nullopt;
    Sunflower out{inner->core.with(best), {}};
    for (int p : inner->petals)
        out.petals.push_back(origin[p]);
    return out;
}

bool pick_disjoint(const std::vector<VertexSet>& rests, std::size_t from, int need, VertexSet& used,
                   std::vector<int>& chosen)
{
    if (need == 0)
        return true;
    for (std::size_t i = from; i < rests.size(); ++i) {
        if (rests.size() - i < static_cast<std::size_t>(need))
            return false;
        if (rests[i].intersects(used))
            continue;
        used |= rests[i];
        chosen.push_back(static_cast<int>(i));
        if (pick_disjoint(rests, i + 1, need - 1, used, chosen))
            return true;
        chosen.pop_back();
        used -= rests[i];
    }
    return false;
}

// Tries every subset of every set as the core.
std::optional<Sunflower> exhaustive_sunflower(const std::vector<VertexSet>& sets, int petals, int universe)
{
    std::set<VertexSet> cores;
    for (const auto& s : sets) {
        auto members = s.members();
        const int size = static_cast<int>(members.size());
        for (std::uint32_t mask = 0; mask < (1u << size); ++mask) {
            VertexSet core(universe);
            for (int i = 0; i < size; ++i)
                if ((mask >> i) & 1u)
                    core.set(members[i]);
            cores.insert(std::move(core));
        }
    }
    for (const auto& core : cores) {
        std::vector<VertexSet> rests;
        std::vector<int> ids;
        for (int id = 0; id < static_cast<int>(sets.size()); ++id)
            if (core.is_subset_of(sets[id]) && sets[id] != core) {
                rests.push_back(sets[id] - core);
                ids.push_back(id);
            }
        if (static_cast<int>(rests.size()) < petals)
            continue;
        VertexSet used(universe);
        std::vector<int> chosen;
        if (pick_disjoint(rests, 0, petals, used, chosen)) {
            Sunflower out{core, {}};
            for (int c : chosen)
                out.petals.push_back(ids[c]);
            return out;
        }
    }
    return std::nullopt;
}

constexpr std::size_t kExhaustiveSunflowerLimit = 64;

std::optional<Sunflower> find_sunflower(const std::vector<VertexSet>& sets, int petals, int universe)
{
    std::vector<int> ids(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i)
        ids[i] = static_cast<int>(i);
    if (auto s = greedy_sunflower(sets, ids, petals, universe))
        return s;
    if (sets.size() <= kExhaustiveSunflowerLimit)
        return exhaustive_sunflower(sets, petals, universe);
    return std::nullopt;
}

bool branch(const SetSystem& sys, int k, VertexSet& chosen, SearchStats& stats, int depth)
{
    ++stats.nodes;
    stats.depth = std::max(stats.depth, depth);
    auto unhit = std::find_if(sys.sets.begin(), sys.sets.end(), [&](const VertexSet& s) { return !s.intersects(chosen); });
    if (unhit == sys.sets.end())
        return true;
    if (k == 0)
        return false;
    for (int e : unhit->members()) {
        chosen.set(e);
        if (branch(sys, k - 1, chosen, stats, depth + 1))
            return true;
        chosen.reset(e);
    }
    return false;
}

} // namespace

std::optional<SplitPartition> is_rl_split(const Graph& g, int r, int l, int max_n)
{
    if (r < 0 || l < 0)
        throw ContractViolation("is_rl_split: negative parameter");
    const int n = g.n();
    if (n > max_n || n > 30)
        throw BudgetExceeded("is_rl_split: n = " + std::to_string(n) + " exceeds the cap of "
                             + std::to_string(std::min(max_n, 30)));
    auto tables = subset_tables(g);
    std::uint32_t second = 0;
    if (!split_by_tables(tables, n, r, l, &second))
        return std::nullopt;
    SplitPartition out{VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v)
        ((second >> v) & 1u ? out.low_independence : out.low_clique).set(v);
    return out;
}

bool family_certified(int r, int l, int cap)
{
    if (l == 0)
        return cap >= r + 1;
    if (r == 0)
        return cap >= l + 1;
    if (r == 1 && l == 1)
        return cap >= 5;
    return false;
}

ForbiddenFamily enumerate_forbidden_family(int r, int l, int cap)
{
    if (r < 0 || l < 0 || cap < 0)
        throw ContractViolation("enumerate_forbidden_family: negative parameter");
    if (cap > kMaxFamilyCap)
        throw BudgetExceeded("enumerate_forbidden_family: cap " + std::to_string(cap) + " exceeds "
                             + std::to_string(kMaxFamilyCap));
    ForbiddenFamily fam;
    fam.r = r;
    fam.l = l;
    fam.cap = cap;
    fam.certified_complete = family_certified(r, l, cap);

    std::vector<Graph> level{Graph(0)};
    for (int m = 1; m <= cap; ++m) {
        std::map<std::uint64_t, Graph> next;
        std::map<std::uint64_t, Graph> minimal;
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
                if (split_by_tables(subset_tables(candidate), m, r, l, nullptr)) {
                    if (m < cap) {
                        auto form = canonical_form(candidate);
                        if (!next.contains(form.code))
                            next.emplace(form.code, graph_from_code(m, form.code));
                    }
                    continue;
                }
                bool is_minimal = true;
                for (int v = 0; v + 1 < m && is_minimal; ++v) {
                    auto sub = delete_vertices(candidate, VertexSet::of(m, {v})).graph;
                    is_minimal = split_by_tables(subset_tables(sub), m - 1, r, l, nullptr);
                }
                if (!is_minimal)
                    continue;
                auto form = canonical_form(candidate);
                if (!minimal.contains(form.code))
                    minimal.emplace(form.code, graph_from_code(m, form.code));
            }
        }
        for (auto& [code, graph] : minimal) {
            fam.d = m;
            fam.members.push_back(std::move(graph));
        }
        level.clear();
        for (auto& [code, graph] : next)
            level.push_back(std::move(graph));
    }
    return fam;
}

SetSystem extract_hitting_instance(const Graph& g, const ForbiddenFamily& fam, std::int64_t budget)
{
    const int n = g.n();
    SetSystem sys;
    sys.universe = n;
    sys.d = fam.d;

    MemberIndex index;
    std::set<int> sizes;
    for (int id = 0; id < static_cast<int>(fam.members.size()); ++id) {
        const auto& h = fam.members[id];
        index.by_code.emplace(std::make_pair(h.n(), canonical_form(h).code), id);
        index.size_edges.emplace(h.n(), h.edge_count());
        sizes.insert(h.n());
    }
    std::int64_t candidates = 0;
    for (int s : sizes)
        candidates += binomial(n, s);
    if (candidates > budget)
        throw BudgetExceeded("extract_hitting_instance: " + std::to_string(candidates)
                             + " candidate subsets exceed the budget of " + std::to_string(budget));

    for (int s : sizes) {
        if (s > n)
            continue;
        std::vector<int> comb(s);
        for (int i = 0; i < s; ++i)
            comb[i] = i;
        do {
            int edges = 0;
            for (int i = 0; i < s; ++i)
                for (int j = i + 1; j < s; ++j)
                    edges += g.adjacent(comb[i], comb[j]);
            if (!index.size_edges.contains({s, edges}))
                continue;
            auto sub = induced_subgraph(g, VertexSet::of(n, std::span<const int>(comb)));
            auto form = canonical_form(sub.graph);
            auto it = index.by_code.find({s, form.code});
            if (it == index.by_code.end())
                continue;
            Provenance prov{it->second, {}};
            for (int pos = 0; pos < s; ++pos)
                prov.embedding.push_back(sub.to_host[form.order[pos]]);
            sys.sets.push_back(VertexSet::of(n, std::span<const int>(comb)));
            sys.provenance.push_back(std::move(prov));
        } while (next_combination(comb, n));
    }
    return sys;
}

Kernel sunflower_kernel(const SetSystem& sys, int k, int d)
{
    Kernel out;
    out.system.universe = sys.universe;
    out.system.d = d;
    out.k = k;
    for (const auto& s : sys.sets)
        if (s.count() > d)
            throw ContractViolation("sunflower_kernel: set " + s.to_string() + " exceeds d = " + std::to_string(d));

    std::vector<VertexSet> sets = minimalize(sys.sets);
    while (true) {
        if (out.k < 0 || std::any_of(sets.begin(), sets.end(), [](const VertexSet& s) { return s.empty(); })) {
            out.infeasible = true;
            break;
        }
        if (sets.empty())
            break;
        if (out.k == 0) {
            out.infeasible = true;
            break;
        }
        auto single = std::find_if(sets.begin(), sets.end(), [](const VertexSet& s) { return s.count() == 1; });
        if (single != sets.end()) {
            int e = single->first();
            out.forced.push_back(e);
            --out.k;
            std::erase_if(sets, [&](const VertexSet& s) { return s.test(e); });
            continue;
        }
        auto flower = find_sunflower(sets, out.k + 1, sys.universe);
        if (!flower)
            break;
        if (flower->core.empty()) {
            out.infeasible = true;
            break;
        }
        std::erase_if(sets, [&](const VertexSet& s) { return flower->core.is_subset_of(s); });
        sets.push_back(flower->core);
        sets = minimalize(std::move(sets));
    }
    std::sort(out.forced.begin(), out.forced.end());
    out.system.sets = std::move(sets);
    return out;
}

std::optional<VertexSet> branch_hitting_set(const SetSystem& sys, int k, SearchStats* stats)
{
    SearchStats local;
    VertexSet chosen(sys.universe);
    bool found = k >= 0 && branch(sys, k, chosen, local, 1);
    if (stats)
        *stats = local;
    if (!found)
        return std::nullopt;
    return chosen;
}

KernelReport kernelize(const Graph& g, int r, int l, int k, const ForbiddenFamily& fam, const KernelOptions& opts)
{
    if (fam.r != r || fam.l != l)
        throw ContractViolation("kernelize: family was enumerated for different (r,l)");
    if (!fam.certified_complete) {
        std::string msg = "forbidden family for (" + std::to_string(r) + "," + std::to_string(l) + ") with cap "
                          + std::to_string(fam.cap) + " is not certified complete; answers may be wrong";
        if (opts.strict)
            throw IncompleteFamily(msg);
        if (opts.warn)
            opts.warn(msg);
    }
    KernelReport report;
    report.instance = extract_hitting_instance(g, fam, opts.budget);
    report.kernel = sunflower_kernel(report.instance, k, fam.d);
    if (report.kernel.infeasible)
        return report;
    auto rest = branch_hitting_set(report.kernel.system, report.kernel.k, &report.branch_stats);
    if (!rest)
        return report;
    for (int e : report.kernel.forced)
        rest->set(e);
    report.deletion = std::move(rest);
    return report;
}

std::optional<VertexSet> solve_via_kernel(const Graph& g, int r, int l, int k, const ForbiddenFamily& fam,
                                          const KernelOptions& opts)
{
    return kernelize(g, r, l, k, fam, opts).deletion;
}

} // namespace partize
