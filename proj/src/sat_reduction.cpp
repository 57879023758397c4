#include "partize/sat_reduction.hpp"

#include "partize/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include "json.hpp"

namespace partize {

std::string VertexRole::label() const
{
    if (kind == Kind::literal)
        return (id > 0 ? "+x" : "-x") + std::to_string(std::abs(id));
    return "w" + std::to_string(id + 1) + "^" + std::to_string(copy);
}

int literal_vertex(Literal lit)
{
    if (lit == 0)
        throw ContractViolation("literal 0");
    return 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0);
}

int clause_vertex(const CnfFormula& phi, int clause, int copy)
{
    if (clause < 0 || clause >= phi.num_clauses() || (copy != 1 && copy != 2))
        throw ContractViolation("clause vertex index out of range");
    return 2 * phi.num_vars + 2 * clause + (copy - 1);
}

namespace {

Literal literal_of_vertex(int v) { return (v % 2 == 0 ? 1 : -1) * (v / 2 + 1); }

} // namespace

ReducedInstance build_instance(const CnfFormula& phi)
{
    validate(phi);
    const int n = phi.num_vars;
    const int m = phi.num_clauses();
    ReducedInstance inst;
    inst.formula = phi;
    inst.r = n;
    inst.l = 1;

    GraphBuilder b(2 * n + 2 * m);
    for (int x = 1; x <= n; ++x) {
        inst.roles.push_back({VertexRole::Kind::literal, x});
        inst.roles.push_back({VertexRole::Kind::literal, -x});
    }
    for (int j = 0; j < m; ++j) {
        inst.roles.push_back({VertexRole::Kind::clause, j, 1});
        inst.roles.push_back({VertexRole::Kind::clause, j, 2});
    }

    for (int p = 0; p < 2 * n; ++p)
        for (int q = p + 1; q < 2 * n; ++q)
            if (p / 2 != q / 2)
                b.add_edge(p, q);

    for (int j = 0; j < m; ++j) {
        const auto& clause = phi.clauses[j];
        for (int p = 0; p < 2 * n; ++p) {
            Literal lit = literal_of_vertex(p);
            if (std::find(clause.begin(), clause.end(), lit) != clause.end())
                continue;
            b.add_edge(p, clause_vertex(phi, j, 1));
            b.add_edge(p, clause_vertex(phi, j, 2));
        }
    }
    inst.graph = std::move(b).build();
    return inst;
}

ClauseWitness default_witness(const CnfFormula& phi, const Assignment& tau)
{
    ClauseWitness f;
    for (const auto& clause : phi.clauses) {
        auto it = std::find_if(clause.begin(), clause.end(), [&](Literal lit) { return tau.value(lit); });
        if (it == clause.end())
            throw ContractViolation("assignment leaves a clause unsatisfied");
        f.literal.push_back(*it);
    }
    return f;
}

ICPartition partition_from_assignment(const ReducedInstance& inst, const Assignment& tau, const ClauseWitness& f)
{
    const auto& phi = inst.formula;
    const int n = phi.num_vars;
    const int size = inst.graph.n();
    if (static_cast<int>(tau.values.size()) != n)
        throw ContractViolation("assignment length does not match variable count");
    if (!satisfies(tau, phi))
        throw ContractViolation("assignment does not satisfy the formula");
    if (static_cast<int>(f.literal.size()) != phi.num_clauses())
        throw ContractViolation("clause witness has the wrong number of entries");

    std::vector<VertexSet> blocks(n, VertexSet(size));
    VertexSet clique(size);
    for (int x = 1; x <= n; ++x) {
        Literal t = tau.values[x - 1] ? x : -x;
        blocks[x - 1].set(literal_vertex(t));
        clique.set(literal_vertex(-t));
    }
    for (int j = 0; j < phi.num_clauses(); ++j) {
        Literal y = f.literal[j];
        const auto& clause = phi.clauses[j];
        if (std::find(clause.begin(), clause.end(), y) == clause.end())
            throw ContractViolation("witness literal is not in its clause");
        if (!tau.value(y))
            throw ContractViolation("witness literal is false under the assignment");
        blocks[std::abs(y) - 1].set(clause_vertex(phi, j, 1));
        blocks[std::abs(y) - 1].set(clause_vertex(phi, j, 2));
    }

    ICPartition part{VertexSet(size), clique, Refinement{}};
    for (auto& b : blocks)
        part.independent_side |= b;
    part.refinement->independent = std::move(blocks);
    if (!clique.empty())
        part.refinement->cliques.push_back(clique);
    return part;
}

Assignment assignment_from_partition(const ReducedInstance& inst, const ICPartition& part)
{
    const int n = inst.formula.num_vars;
    if (auto v = verify_partition(inst.graph, inst.r, inst.l, VertexSet(inst.graph.n()), part); !v)
        throw ContractViolation("not a valid (n,1)-partition: " + v.reason);
    Assignment tau{std::vector<bool>(n, true)};
    for (int x = 1; x <= n; ++x) {
        bool pos_in_clique = part.clique_side.test(literal_vertex(x));
        bool neg_in_clique = part.clique_side.test(literal_vertex(-x));
        if (pos_in_clique && neg_in_clique)
            throw ContractViolation("clique holds both literals of x" + std::to_string(x));
        tau.values[x - 1] = !pos_in_clique;
    }
    if (!satisfies(tau, inst.formula))
        throw std::logic_error("assignment recovered from a valid partition does not satisfy the formula");
    return tau;
}

std::optional<OddHoleCertificate> audit_perfect(const ReducedInstance& inst)
{
    return find_odd_hole_or_antihole(inst.graph);
}

std::string labels_json(const ReducedInstance& inst)
{
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& role : inst.roles) {
        if (role.kind == VertexRole::Kind::literal)
            labels.push_back({{"literal", (role.id > 0 ? "+x" : "-x") + std::to_string(std::abs(role.id))}});
        else
            labels.push_back({{"clause", role.id + 1}, {"copy", role.copy}});
    }
    nlohmann::json doc = {{"r", inst.r}, {"l", inst.l}, {"labels", labels}};
    return doc.dump(2) + "\n";
}

} // namespace partize
