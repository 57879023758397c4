#pragma once

#include "partize/cnf.hpp"
#include "partize/graph.hpp"
#include "partize/holes.hpp"
#include "partize/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace partize {

// Role of a vertex in the CNF gadget graph.
struct VertexRole {
    enum class Kind { literal, clause };
    Kind kind;
    // literal: signed variable; clause: 0-based clause index
    int id;
    // clause copy, 1 or 2; 0 for literals
    int copy = 0;

    std::string label() const;
};

// Gadget graph answering "is G an (n,1)-graph" iff phi is satisfiable.
// Vertex numbering: v_{x1}, v_{-x1}, v_{x2}, v_{-x2}, ..., then w_1^1, w_1^2, w_2^1, ...
struct ReducedInstance {
    CnfFormula formula;
    Graph graph;
    int r = 0;
    int l = 1;
    std::vector<VertexRole> roles;
};

int literal_vertex(Literal lit);
int clause_vertex(const CnfFormula& phi, int clause, int copy);

// Literal vertices are pairwise adjacent except complementary pairs; a literal vertex is adjacent
// to both copies of every clause not containing that literal; clause vertices are independent.
ReducedInstance build_instance(const CnfFormula& phi);

// f(C): the literal chosen to satisfy each clause.
struct ClauseWitness {
    std::vector<Literal> literal;
};

// Lowest-variable true literal of each clause under tau; throws if some clause is unsatisfied.
ClauseWitness default_witness(const CnfFormula& phi, const Assignment& tau);

// n independent blocks I_y = {v_y} ∪ {w_C : f(C) = y} for the true literals y, and one clique of the
// false literals. Throws ContractViolation if tau does not satisfy phi or f is inconsistent.
ICPartition partition_from_assignment(const ReducedInstance& inst, const Assignment& tau, const ClauseWitness& f);

// Literal vertices in the clique are false; a variable with neither literal in the clique is true.
// Throws ContractViolation on an invalid (n,1)-partition.
Assignment assignment_from_partition(const ReducedInstance& inst, const ICPartition& part);

// Odd hole or antihole in the gadget graph; none expected.
std::optional<OddHoleCertificate> audit_perfect(const ReducedInstance& inst);

// JSON sidecar: {"r": n, "l": 1, "labels": [{"literal": "+x1"}, ..., {"clause": 1, "copy": 1}, ...]}.
std::string labels_json(const ReducedInstance& inst);

} // namespace partize
