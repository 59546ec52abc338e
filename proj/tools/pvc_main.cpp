// Command-line front end for the partial-vertex-cover toolkit.
//
// Exit codes:
//   0  success
//   1  verify-reduction found the two sides inequivalent
//   2  bad parameters or malformed input file
//   3  infeasible coverage target (t < 0 or t > m)
//   4  solver certificate failure (instance lacks nonincreasing marginals)
//   5  method/instance mismatch
//   6  instance exceeds the enumeration size guard

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pvc/graph.hpp"
#include "pvc/lagrangian.hpp"
#include "pvc/oracle.hpp"
#include "pvc/reduction.hpp"
#include "pvc/treedp.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInequivalent = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitMncViolation = 4;
constexpr int kExitMismatch = 5;
constexpr int kExitGuard = 6;

struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Line-oriented report: `key value` pairs plus optional bare lines (used by
/// the profile listing). The JSON view mirrors the same fields.
struct Report {
    std::vector<std::string> lines;
    ordered_json json = ordered_json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void kv(const std::string& key, const std::string& value) {
        lines.push_back(value.empty() ? key : key + " " + value);
        json[key] = value;
    }
    void kv(const std::string& key, long long value) {
        lines.push_back(key + " " + std::to_string(value));
        json[key] = value;
    }
    void bare(const std::string& line) { lines.push_back(line); }

    void emit(bool as_json, const std::string& out_path) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        lines.push_back("elapsed_ms " + std::to_string(ms));
        json["elapsed_ms"] = ms;

        std::ostringstream text;
        if (as_json) {
            text << json.dump() << '\n';
        } else {
            for (const auto& line : lines) text << line << '\n';
        }
        std::cout << text.str();
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) throw std::runtime_error("cannot write " + out_path);
            f << text.str();
        }
    }
};

std::string join_ids(const std::vector<int>& ids) {
    std::string s;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(ids[i]);
    }
    return s;
}

pvc::Graph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw pvc::ParseError(0, "cannot open " + path);
    return pvc::parse_graph(f);
}

std::string classify(const pvc::Graph& g) {
    if (pvc::is_tree(g)) return "tree";
    if (pvc::is_forest(g)) return "forest";
    try {
        pvc::bipartition(g);
        return "bipartite";
    } catch (const pvc::NonBipartiteError&) {
        return "general";
    }
}

void describe_input(Report& rep, const pvc::Graph& g, const std::string& cls) {
    rep.lines.push_back("input n " + std::to_string(g.n()) + " m " + std::to_string(g.m()) +
                        " class " + cls);
    rep.json["input"] = {{"n", g.n()}, {"m", g.m()}, {"class", cls}};
}

int oracle_guard() {
    if (const char* env = std::getenv("PVC_ORACLE_MAX_N")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("PVC_ORACLE_MAX_N must be a positive integer");
    }
    return pvc::kDefaultOracleMaxN;
}

void put_solution(Report& rep, const pvc::PvcSolution& sol) {
    rep.kv("t", sol.t);
    rep.kv("size", sol.size);
    rep.kv("covered", sol.covered);
    rep.lines.push_back(sol.vertices.empty() ? "vertices" : "vertices " + join_ids(sol.vertices));
    rep.json["vertices"] = sol.vertices;
}

int cmd_solve(const std::string& input, int t, std::string method, bool as_json,
              const std::string& out_path) {
    Report rep;
    rep.kv("command", std::string("solve"));
    pvc::Graph g = load_graph(input);
    std::string cls = classify(g);
    describe_input(rep, g, cls);
    if (!g.unit_weights())
        throw MismatchError("solvers require unit vertex weights (weighted input)");
    if (t < 0 || t > g.m())
        throw pvc::InfeasibleError("target t=" + std::to_string(t) + " outside [0, m=" +
                                   std::to_string(g.m()) + "]");
    const int guard = oracle_guard();

    // Conservative ladder: acyclic instances get the always-exact DP; other
    // bipartite instances get the threshold solver cross-checked against the
    // oracle while the oracle can reach them. No class of cyclic bipartite
    // graphs carries an exactness guarantee on its own (bounded degree does
    // not help; a subdivided star already breaks concavity), so anything
    // beyond the oracle's reach is refused rather than answered on trust.
    bool verify_against_oracle = false;
    if (method == "auto") {
        if (cls == "tree" || cls == "forest") {
            method = "tree-dp";
        } else if (cls == "bipartite" && g.n() <= guard) {
            method = "lagrangian";
            verify_against_oracle = true;
        } else {
            throw MismatchError(
                "no exact method applies automatically: instance is " + cls + " with " +
                std::to_string(g.n()) + " vertices, beyond the enumeration oracle; pick "
                "--method explicitly (the threshold solver is exact only under "
                "nonincreasing coverage marginals)");
        }
    }
    rep.kv("method", method + (verify_against_oracle ? "+oracle-verify" : ""));

    pvc::PvcSolution sol;
    if (method == "brute") {
        sol = pvc::solve_pvc_bruteforce({g, t}, guard);
    } else if (method == "tree-dp") {
        if (!pvc::is_forest(g)) throw MismatchError("tree-dp requires an acyclic instance");
        sol = pvc::solve_pvc_tree({g, t});
    } else if (method == "lagrangian") {
        if (cls != "tree" && cls != "forest" && cls != "bipartite")
            throw MismatchError("lagrangian requires a bipartite instance");
        pvc::BipartiteLabeling lab = pvc::bipartition(g);
        sol = pvc::solve_pvc_mnc({g, t}, lab);
        if (verify_against_oracle) {
            pvc::PvcSolution reference = pvc::solve_pvc_bruteforce({g, t}, guard);
            if (reference.size != sol.size)
                throw pvc::MncViolationError(
                    "threshold solver returned size " + std::to_string(sol.size) +
                    " but the exhaustive optimum is " + std::to_string(reference.size));
        }
    } else {
        throw CLI::ValidationError("--method", "unknown method '" + method + "'");
    }
    put_solution(rep, sol);
    rep.emit(as_json, out_path);
    return kExitOk;
}

int cmd_profile(const std::string& input, bool weighted, int max_k, bool as_json,
                const std::string& out_path) {
    Report rep;
    rep.kv("command", std::string("profile"));
    pvc::Graph g = load_graph(input);
    std::string cls = classify(g);
    describe_input(rep, g, cls);
    const int guard = oracle_guard();

    pvc::CoverageProfile prof;
    if (weighted) {
        int budget = max_k >= 0 ? max_k : static_cast<int>(g.total_weight());
        prof = pvc::weighted_profile(g, budget, guard);
    } else {
        if (!g.unit_weights())
            throw MismatchError("plain profile needs unit weights; pass --weighted");
        if (cls == "tree" || cls == "forest") {
            prof = pvc::tree_profile(g);
            if (max_k >= 0 && max_k + 1 < static_cast<int>(prof.opt.size())) {
                prof.opt.resize(max_k + 1);
                prof = pvc::CoverageProfile::from_opt(std::move(prof.opt), false);
            }
        } else {
            prof = pvc::opt_profile(g, max_k >= 0 ? std::min(max_k, g.n()) : g.n(), guard);
        }
    }

    for (int v : prof.opt) rep.bare(std::to_string(v));
    rep.json["opt"] = prof.opt;
    pvc::MncReport mnc = pvc::check_mnc(prof);
    rep.bare(mnc.holds ? "mnc holds" : "mnc violated at k=" + std::to_string(*mnc.first_violation));
    rep.json["mnc"] = {{"holds", mnc.holds}};
    if (!mnc.holds) rep.json["mnc"]["first_violation"] = *mnc.first_violation;
    rep.emit(as_json, out_path);
    return kExitOk;
}

int cmd_reduce(const std::string& input, int k, const std::string& out_path, bool as_json) {
    Report rep;
    rep.kv("command", std::string("reduce"));
    pvc::Graph g = load_graph(input);
    describe_input(rep, g, classify(g));
    pvc::ReductionArtifact art = pvc::reduce_clique_to_pvcb(g, k);
    rep.kv("budget", art.budget);
    rep.kv("target", art.target_t);
    rep.json["warning"] = art.precondition_warning;
    if (art.precondition_warning)
        rep.bare("warning construction guarantee needs m' > k(k-1)/2 and k >= 5");

    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    pvc::write_artifact(art, f);
    rep.kv("written", out_path);
    rep.emit(as_json, "");
    return kExitOk;
}

int cmd_gen(const std::string& fixture, const std::vector<int>& random_tree,
            const std::vector<int>& random_bipartite, int density, const std::string& out_path,
            bool as_json) {
    Report rep;
    rep.kv("command", std::string("gen"));
    std::optional<pvc::Graph> g;
    if (!fixture.empty()) {
        if (fixture == "mnc-counterexample")
            g = pvc::fixture_mnc_counterexample();
        else if (fixture == "weighted-spider")
            g = pvc::fixture_weighted_spider();
        else
            throw CLI::ValidationError("--fixture", "unknown fixture '" + fixture + "'");
    } else if (!random_tree.empty()) {
        g = pvc::gen_random_tree(random_tree[0], static_cast<uint64_t>(random_tree[1]));
    } else if (!random_bipartite.empty()) {
        g = pvc::gen_random_bipartite(random_bipartite[0], random_bipartite[1],
                                      random_bipartite[2], density,
                                      static_cast<uint64_t>(random_bipartite[3]));
    } else {
        throw CLI::ValidationError("gen", "pick --fixture, --random-tree or --random-bipartite");
    }

    rep.kv("n", g->n());
    rep.kv("m", g->m());
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    pvc::write_graph(*g, f);
    rep.kv("written", out_path);
    rep.emit(as_json, "");
    return kExitOk;
}

int cmd_verify_reduction(const std::string& input, int k, bool as_json) {
    Report rep;
    rep.kv("command", std::string("verify-reduction"));
    pvc::Graph g = load_graph(input);
    describe_input(rep, g, classify(g));
    pvc::VerificationResult res =
        pvc::verify_reduction_detail(g, k, oracle_guard(), /*want_cover_witness=*/true);
    pvc::ReductionArtifact art = pvc::reduce_clique_to_pvcb(g, k);
    rep.kv("budget", art.budget);
    rep.kv("target", art.target_t);
    rep.kv("equivalent", std::string(res.equivalent ? "true" : "false"));
    rep.json["equivalent"] = res.equivalent;
    rep.lines.push_back(res.clique_exists ? "clique " + join_ids(res.clique) : "clique none");
    rep.json["clique"] = res.clique_exists ? ordered_json(res.clique) : ordered_json(nullptr);
    rep.lines.push_back(!res.cover.empty() || res.pvcb_feasible ? "cover " + join_ids(res.cover)
                                                                : "cover none");
    rep.json["cover"] = res.pvcb_feasible ? ordered_json(res.cover) : ordered_json(nullptr);
    rep.emit(as_json, "");
    return res.equivalent ? kExitOk : kExitInequivalent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact partial vertex cover toolkit for bipartite graphs and trees"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON object instead of text lines");

    auto* solve = app.add_subcommand("solve", "solve a partial-cover instance");
    std::string solve_input, solve_method = "auto", solve_out;
    int solve_t = 0;
    solve->add_option("--input", solve_input, "graph file")->required();
    solve->add_option("--t", solve_t, "edges that must be covered")->required();
    solve->add_option("--method", solve_method, "auto|lagrangian|tree-dp|brute")
        ->check(CLI::IsMember({"auto", "lagrangian", "tree-dp", "brute"}));
    solve->add_option("--out", solve_out, "also write the report to this file");

    auto* profile = app.add_subcommand("profile", "best coverage per budget plus concavity verdict");
    std::string profile_input, profile_out;
    bool profile_weighted = false;
    int profile_max_k = -1;
    profile->add_option("--input", profile_input, "graph file")->required();
    profile->add_flag("--weighted", profile_weighted, "index budgets by total vertex weight");
    profile->add_option("--max-k", profile_max_k, "truncate the profile at this budget");
    profile->add_option("--out", profile_out, "also write the report to this file");

    auto* reduce = app.add_subcommand("reduce", "build the clique gadget instance");
    std::string reduce_input, reduce_out;
    int reduce_k = 0;
    reduce->add_option("--input", reduce_input, "source graph file")->required();
    reduce->add_option("--k", reduce_k, "clique size")->required();
    reduce->add_option("--out", reduce_out, "artifact file to write")->required();

    auto* gen = app.add_subcommand("gen", "write fixture or random instances");
    std::string gen_fixture, gen_out;
    std::vector<int> gen_tree, gen_bip;
    int gen_density = 50;
    gen->add_option("--fixture", gen_fixture, "mnc-counterexample|weighted-spider");
    gen->add_option("--random-tree", gen_tree, "N SEED")->expected(2);
    gen->add_option("--random-bipartite", gen_bip, "NL NR MAXDEG SEED")->expected(4);
    gen->add_option("--density", gen_density, "candidate-edge percentage (default 50)");
    gen->add_option("--out", gen_out, "graph file to write")->required();

    auto* verify = app.add_subcommand("verify-reduction", "check the gadget equivalence");
    std::string verify_input;
    int verify_k = 0;
    verify->add_option("--input", verify_input, "source graph file")->required();
    verify->add_option("--k", verify_k, "clique size")->required();

    try {
        app.parse(argc, argv);
        if (*solve) return cmd_solve(solve_input, solve_t, solve_method, as_json, solve_out);
        if (*profile)
            return cmd_profile(profile_input, profile_weighted, profile_max_k, as_json,
                               profile_out);
        if (*reduce) return cmd_reduce(reduce_input, reduce_k, reduce_out, as_json);
        if (*gen) return cmd_gen(gen_fixture, gen_tree, gen_bip, gen_density, gen_out, as_json);
        if (*verify) return cmd_verify_reduction(verify_input, verify_k, as_json);
        return kExitParse;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const pvc::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const pvc::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const pvc::MncViolationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMncViolation;
    } catch (const MismatchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const pvc::SizeGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const pvc::NonBipartiteError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
}
