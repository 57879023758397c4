#include "cli.hpp"

#include "partize/brute.hpp"
#include "partize/cnf.hpp"
#include "partize/dimacs.hpp"
#include "partize/errors.hpp"
#include "partize/generators.hpp"
#include "partize/holes.hpp"
#include "partize/io.hpp"
#include "partize/kernel.hpp"
#include "partize/oracles.hpp"
#include "partize/sat_reduction.hpp"
#include "partize/solver.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace partize::cli {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Config {
    std::string input;
    std::string solution;
    std::string out;
    int r = 0;
    int l = 0;
    int k = 0;
    int cap = 0;
    std::int64_t budget = 0;
    std::uint64_t seed = 0;
    bool audit = false;
    bool oracle = false;
    bool strict = false;
    bool json = false;
    bool strip = false;
    // gen
    int n = 10;
    int n1 = 4;
    int n2 = 4;
    int m = 5;
    int wmin = 1;
    int wmax = 3;
    double p = 0.5;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream o(path, std::ios::binary);
    if (!o)
        throw std::runtime_error("cannot write " + path);
    o << text;
}

// --budget, else PARTIZE_BUDGET, else fallback.
std::int64_t budget_of(const Config& cfg, std::int64_t fallback)
{
    if (cfg.budget > 0)
        return cfg.budget;
    if (const char* env = std::getenv("PARTIZE_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0)
            throw ContractViolation(std::string("PARTIZE_BUDGET must be a positive integer, got \"") + env + "\"");
        return v;
    }
    return fallback;
}

void emit(std::ostream& out, const Config& cfg, const std::string& text)
{
    if (cfg.out.empty())
        out << text;
    else
        write_file(cfg.out, text);
}

std::string class_label(const Graph& g)
{
    try {
        return std::string(to_string(classify(g)));
    } catch (const UnsupportedClass&) {
        return "unclassified";
    }
}

int audit_graph(const Graph& g, std::ostream& err)
{
    if (auto cert = find_odd_hole_or_antihole(g)) {
        err << "audit: graph is not perfect, odd " << (cert->kind == HoleKind::hole ? "hole" : "antihole") << " "
            << Json(cert->cycle).dump() << "\n";
        return kError;
    }
    err << "audit: no odd hole or antihole\n";
    return kYes;
}

int cmd_solve(const Config& cfg, int k, std::ostream& out, std::ostream& err)
{
    Graph g = read_graph(slurp(cfg.input));
    if (cfg.audit && audit_graph(g, err) != kYes)
        return kError;
    SolveReport report = solve(g, cfg.r, cfg.l, k);
    const bool yes = report.solution.has_value();
    err << "n=" << g.n() << " m=" << g.edge_count() << " class=" << class_label(g) << " (r,l,k)=("
        << cfg.r << "," << cfg.l << "," << k << ") compressions=" << report.runs.size()
        << " nodes=" << report.total.nodes << " answer=" << (yes ? "yes" : "no") << "\n";
    if (yes) {
        if (auto v = verify_solution(g, cfg.r, cfg.l, k, *report.solution); !v) {
            err << "internal error: certificate rejected: " << v.reason << "\n";
            return kError;
        }
    }
    if (cfg.oracle) {
        auto brute = brute_min_deletion(g, cfg.r, cfg.l, k, BruteBudget{budget_of(cfg, BruteBudget{}.max_nodes)});
        if (brute.has_value() != yes) {
            err << "ORACLE DISAGREEMENT: solver says " << (yes ? "yes" : "no") << ", brute force says "
                << (brute ? "yes" : "no") << "\n";
            return kError;
        }
        err << "oracle: agrees\n";
    }
    emit(out, cfg, (yes ? solution_to_json(*report.solution) : Json{{"answer", "no"}}).dump() + "\n");
    return yes ? kYes : kNo;
}

int default_cap(int r, int l)
{
    if (l == 0)
        return r + 1;
    if (r == 0)
        return l + 1;
    if (r == 1 && l == 1)
        return 5;
    return std::min(kMaxFamilyCap, 7);
}

int cmd_kernelize(const Config& cfg, std::ostream& out, std::ostream& err)
{
    Graph g = read_graph(slurp(cfg.input));
    const int cap = cfg.cap > 0 ? cfg.cap : default_cap(cfg.r, cfg.l);
    auto fam = enumerate_forbidden_family(cfg.r, cfg.l, cap);
    KernelOptions opts;
    opts.strict = cfg.strict;
    opts.budget = budget_of(cfg, opts.budget);
    opts.warn = [&](const std::string& msg) { err << "warning: " << msg << "\n"; };
    auto report = kernelize(g, cfg.r, cfg.l, cfg.k, fam, opts);
    const bool yes = report.deletion.has_value();
    Json doc = set_system_to_json(report.kernel.system, report.kernel.k);
    doc["forced"] = report.kernel.forced;
    doc["answer"] = yes ? "yes" : "no";
    if (yes)
        doc["deleted"] = report.deletion->members();
    err << "family: " << fam.members.size() << " members, d=" << fam.d << ", cap=" << cap
        << (fam.certified_complete ? " (complete)" : " (not certified)") << "\n"
        << "instance: " << report.instance.sets.size() << " sets -> kernel: " << report.kernel.system.sets.size()
        << " sets, " << report.kernel.forced.size() << " forced, k=" << report.kernel.k
        << (report.kernel.infeasible ? ", infeasible" : "") << "\n";
    emit(out, cfg, doc.dump() + "\n");
    return yes ? kYes : kNo;
}

int cmd_reduce_sat(const Config& cfg, std::ostream& out, std::ostream& err)
{
    CnfParseOptions popts;
    popts.strip_tautologies = cfg.strip;
    CnfFormula phi = parse_dimacs_cnf(slurp(cfg.input), popts);
    ReducedInstance inst = build_instance(phi);
    if (cfg.out.empty())
        throw ContractViolation("reduce-sat needs --out <prefix>");
    write_file(cfg.out + ".dimacs", write_dimacs(inst.graph));
    write_file(cfg.out + ".labels.json", labels_json(inst) + "\n");
    Json summary{{"r", inst.r}, {"l", inst.l}, {"n", inst.graph.n()}, {"edges", inst.graph.edge_count()}};
    if (cfg.audit) {
        if (auto cert = audit_perfect(inst)) {
            err << "audit: gadget graph is not perfect\n";
            return kError;
        }
        summary["audit"] = "perfect";
    }
    out << summary.dump() << "\n";
    return kYes;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err)
{
    Graph g = read_graph(slurp(cfg.input));
    Json doc = Json::parse(slurp(cfg.solution), nullptr, false);
    if (doc.is_discarded())
        throw ParseError(0, "solution JSON: not valid JSON");
    Solution sol = solution_from_json(doc, g.n());
    const int k = cfg.k >= 0 ? cfg.k : sol.deleted.count();
    Verdict v = verify_solution(g, cfg.r, cfg.l, k, sol);
    out << Json{{"valid", v.ok}, {"reason", v.reason}}.dump() << "\n";
    if (!v)
        err << "invalid: " << v.reason << "\n";
    return v ? kYes : kNo;
}

std::string graph_text(const Config& cfg, const Graph& g)
{
    return cfg.json ? graph_to_json(g).dump() + "\n" : write_dimacs(g);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"partize: vertex partization on perfect graphs"};
    app.require_subcommand(1);
    Config cfg;
    auto nonneg = CLI::NonNegativeNumber;

    auto add_rlk = [&](CLI::App* c, bool with_k) {
        c->add_option("--r", cfg.r, "independent sets")->check(nonneg);
        c->add_option("--l", cfg.l, "cliques")->check(nonneg);
        if (with_k)
            c->add_option("--k", cfg.k, "deletion budget")->check(nonneg);
    };

    auto* solve_cmd = app.add_subcommand("solve", "decide (r,l)-vertex deletion with budget k");
    solve_cmd->add_option("graph", cfg.input, "DIMACS or graph JSON")->required();
    add_rlk(solve_cmd, true);
    solve_cmd->add_flag("--audit", cfg.audit, "reject graphs with an odd hole or antihole");
    solve_cmd->add_flag("--oracle", cfg.oracle, "cross-check against brute force");
    solve_cmd->add_option("--budget", cfg.budget, "brute-force node budget")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--out", cfg.out, "write JSON here instead of stdout");

    auto* rec_cmd = app.add_subcommand("recognize", "decide whether the graph is an (r,l)-graph");
    rec_cmd->add_option("graph", cfg.input)->required();
    add_rlk(rec_cmd, false);
    rec_cmd->add_flag("--audit", cfg.audit);
    rec_cmd->add_flag("--oracle", cfg.oracle);
    rec_cmd->add_option("--budget", cfg.budget)->check(CLI::PositiveNumber);
    rec_cmd->add_option("--out", cfg.out);

    auto* red_cmd = app.add_subcommand("reduce-sat", "CNF to (n,1)-recognition instance");
    red_cmd->add_option("cnf", cfg.input)->required();
    red_cmd->add_option("--out", cfg.out, "output prefix")->required();
    red_cmd->add_flag("--audit", cfg.audit, "check the gadget graph is perfect");
    red_cmd->add_flag("--strip-tautologies", cfg.strip, "drop tautological clauses instead of failing");

    auto* ker_cmd = app.add_subcommand("kernelize", "hitting-set kernel for (r,l)-split deletion");
    ker_cmd->add_option("graph", cfg.input)->required();
    add_rlk(ker_cmd, true);
    ker_cmd->add_option("--cap", cfg.cap, "largest forbidden subgraph size")->check(CLI::Range(1, kMaxFamilyCap));
    ker_cmd->add_flag("--strict", cfg.strict, "fail when the family is not certified complete");
    ker_cmd->add_option("--budget", cfg.budget, "candidate subset budget")->check(CLI::PositiveNumber);
    ker_cmd->add_option("--out", cfg.out);

    auto* ver_cmd = app.add_subcommand("verify", "check a solution certificate");
    ver_cmd->add_option("graph", cfg.input)->required();
    ver_cmd->add_option("solution", cfg.solution)->required();
    add_rlk(ver_cmd, false);
    int verify_k = -1;
    ver_cmd->add_option("--k", verify_k, "deletion budget (default: size of the deletion set)")->check(nonneg);

    auto* gen_cmd = app.add_subcommand("gen", "seeded instance generators");
    gen_cmd->require_subcommand(1);
    auto add_common = [&](CLI::App* c) {
        c->add_option("--seed", cfg.seed);
        c->add_option("--out", cfg.out);
        c->add_flag("--json", cfg.json, "graph JSON instead of DIMACS");
    };
    auto* g_chordal = gen_cmd->add_subcommand("chordal");
    g_chordal->add_option("--n", cfg.n)->check(nonneg);
    add_common(g_chordal);
    auto* g_bip = gen_cmd->add_subcommand("bipartite");
    g_bip->add_option("--n1", cfg.n1)->check(nonneg);
    g_bip->add_option("--n2", cfg.n2)->check(nonneg);
    g_bip->add_option("--p", cfg.p)->check(CLI::Range(0.0, 1.0));
    add_common(g_bip);
    auto* g_planted = gen_cmd->add_subcommand("planted");
    add_rlk(g_planted, true);
    g_planted->add_option("--n", cfg.n)->check(nonneg);
    g_planted->add_option("--p", cfg.p)->check(CLI::Range(0.0, 1.0));
    add_common(g_planted);
    auto* g_sat = gen_cmd->add_subcommand("sat");
    g_sat->add_option("--n", cfg.n, "variables")->check(CLI::PositiveNumber);
    g_sat->add_option("--m", cfg.m, "clauses")->check(nonneg);
    g_sat->add_option("--wmin", cfg.wmin)->check(CLI::PositiveNumber);
    g_sat->add_option("--wmax", cfg.wmax)->check(CLI::PositiveNumber);
    g_sat->add_option("--seed", cfg.seed);
    g_sat->add_option("--out", cfg.out);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }

    try {
        if (solve_cmd->parsed())
            return cmd_solve(cfg, cfg.k, out, err);
        if (rec_cmd->parsed())
            return cmd_solve(cfg, 0, out, err);
        if (red_cmd->parsed())
            return cmd_reduce_sat(cfg, out, err);
        if (ker_cmd->parsed())
            return cmd_kernelize(cfg, out, err);
        if (ver_cmd->parsed()) {
            cfg.k = verify_k;
            return cmd_verify(cfg, out, err);
        }
        Rng rng(cfg.seed);
        if (g_chordal->parsed())
            emit(out, cfg, graph_text(cfg, random_chordal(cfg.n, rng)));
        else if (g_bip->parsed())
            emit(out, cfg, graph_text(cfg, random_bipartite(cfg.n1, cfg.n2, cfg.p, rng)));
        else if (g_planted->parsed())
            emit(out, cfg, graph_text(cfg, planted(cfg.r, cfg.l, cfg.k, cfg.n, cfg.p, rng).graph));
        else if (g_sat->parsed())
            emit(out, cfg, write_dimacs_cnf(random_cnf(cfg.n, cfg.m, cfg.wmin, cfg.wmax, rng)));
        return kYes;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
}

} // namespace partize::cli
