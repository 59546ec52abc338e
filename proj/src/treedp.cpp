#include "pvc/treedp.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace pvc {

namespace {

constexpr int kNeg = std::numeric_limits<int>::min() / 4;

/// tab[f][k] = max edges covered inside the subtree with exactly k selected
/// there, the subtree root being selected iff f = 1. kNeg marks impossible.
struct Tables {
    std::vector<int> t[2];
    int size() const { return static_cast<int>(t[0].size()) - 1; }
};

Tables leaf_tables() {
    Tables tab;
    tab.t[0] = {0, kNeg};
    tab.t[1] = {kNeg, 0};
    return tab;
}

/// Knapsack-merges one child subtree into the accumulated tables of its
/// parent; the parent-child edge is covered when either side is selected.
Tables merge_child(const Tables& acc, const Tables& child) {
    Tables out;
    int total = acc.size() + child.size();
    for (int f = 0; f < 2; ++f) out.t[f].assign(total + 1, kNeg);
    for (int f = 0; f < 2; ++f)
        for (int k = 0; k <= acc.size(); ++k) {
            if (acc.t[f][k] == kNeg) continue;
            for (int fc = 0; fc < 2; ++fc)
                for (int kc = 0; kc <= child.size(); ++kc) {
                    if (child.t[fc][kc] == kNeg) continue;
                    int val = acc.t[f][k] + child.t[fc][kc] + ((f | fc) ? 1 : 0);
                    if (val > out.t[f][k + kc]) out.t[f][k + kc] = val;
                }
        }
    return out;
}

/// Plain (max,+) knapsack merge of two complete profiles.
std::vector<int> merge_profiles(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size() + b.size() - 1, kNeg);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = std::max(out[i + j], a[i] + b[j]);
    return out;
}

RootedTree root_component(const Graph& g, int root) {
    RootedTree rt;
    rt.root = root;
    rt.parent.assign(g.n() + 1, 0);
    rt.children.assign(g.n() + 1, {});
    std::deque<int> queue{root};
    std::vector<char> seen(g.n() + 1, 0);
    seen[root] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        rt.preorder.push_back(u);
        for (int v : g.neighbors(u)) {
            if (seen[v]) continue;
            seen[v] = 1;
            rt.parent[v] = u;
            rt.children[u].push_back(v);
            queue.push_back(v);
        }
    }
    return rt;
}

struct ForestDp {
    const Graph& g;
    std::vector<RootedTree> components;       // ascending root id
    std::vector<Tables> node_tables;          // per vertex
    std::vector<std::vector<int>> comp_opt;   // per component, exact-k profile

    explicit ForestDp(const Graph& graph) : g(graph) {
        if (!g.unit_weights())
            throw std::invalid_argument("tree solver requires unit vertex weights");
        if (!is_forest(g)) throw std::invalid_argument("graph is not acyclic");

        node_tables.assign(g.n() + 1, {});
        std::vector<char> visited(g.n() + 1, 0);
        for (int root = 1; root <= g.n(); ++root) {
            if (visited[root]) continue;
            RootedTree rt = root_component(g, root);
            for (int v : rt.preorder) visited[v] = 1;
            run_component(rt);
            components.push_back(std::move(rt));
        }
    }

    void run_component(const RootedTree& rt) {
        for (auto it = rt.preorder.rbegin(); it != rt.preorder.rend(); ++it) {
            int v = *it;
            Tables tab = leaf_tables();
            for (int c : rt.children[v]) tab = merge_child(tab, node_tables[c]);
            node_tables[v] = std::move(tab);
        }
        const Tables& root_tab = node_tables[rt.root];
        std::vector<int> opt(root_tab.size() + 1);
        for (int k = 0; k <= root_tab.size(); ++k)
            opt[k] = std::max(root_tab.t[0][k], root_tab.t[1][k]);
        comp_opt.push_back(std::move(opt));
    }

    std::vector<int> forest_profile() const {
        std::vector<int> prof{0};
        for (const auto& comp : comp_opt) prof = merge_profiles(prof, comp);
        return prof;
    }

    /// Vertices of a maximum-coverage selection of exactly k_total vertices.
    std::vector<int> reconstruct(int k_total) const {
        // Split k_total across components by replaying the profile merge.
        std::vector<std::vector<int>> prefix{{0}};
        for (const auto& comp : comp_opt) prefix.push_back(merge_profiles(prefix.back(), comp));

        std::vector<int> witness;
        int k = k_total;
        for (int i = static_cast<int>(comp_opt.size()) - 1; i >= 0; --i) {
            int chosen_kc = -1;
            for (int kc = 0; kc <= std::min<int>(k, comp_opt[i].size() - 1); ++kc) {
                int rest = k - kc;
                if (rest >= static_cast<int>(prefix[i].size())) continue;
                if (prefix[i][rest] == kNeg || comp_opt[i][kc] == kNeg) continue;
                if (prefix[i][rest] + comp_opt[i][kc] == prefix[i + 1][k]) {
                    chosen_kc = kc;
                    break;
                }
            }
            if (chosen_kc < 0) throw std::logic_error("component split reconstruction failed");
            reconstruct_component(components[i], chosen_kc, witness);
            k -= chosen_kc;
        }
        std::sort(witness.begin(), witness.end());
        return witness;
    }

    void reconstruct_component(const RootedTree& rt, int k_root, std::vector<int>& out) const {
        const Tables& root_tab = node_tables[rt.root];
        int f_root = root_tab.t[0][k_root] >= root_tab.t[1][k_root] ? 0 : 1;

        struct Goal {
            int v, f, k;
        };
        std::deque<Goal> todo{{rt.root, f_root, k_root}};
        while (!todo.empty()) {
            auto [v, f, k] = todo.front();
            todo.pop_front();
            if (f == 1) out.push_back(v);

            const auto& children = rt.children[v];
            if (children.empty()) continue;
            // Replay the child merges to recover the per-child split.
            std::vector<Tables> prefix{leaf_tables()};
            for (int c : children) prefix.push_back(merge_child(prefix.back(), node_tables[c]));

            int remaining = k;
            for (int i = static_cast<int>(children.size()) - 1; i >= 0; --i) {
                const Tables& child_tab = node_tables[children[i]];
                bool found = false;
                for (int fc = 0; fc < 2 && !found; ++fc)
                    for (int kc = 0; kc <= std::min(remaining, child_tab.size()) && !found; ++kc) {
                        int rest = remaining - kc;
                        if (rest > prefix[i].size()) continue;
                        int base = prefix[i].t[f][rest];
                        int sub = child_tab.t[fc][kc];
                        if (base == kNeg || sub == kNeg) continue;
                        if (base + sub + ((f | fc) ? 1 : 0) == prefix[i + 1].t[f][remaining]) {
                            todo.push_back({children[i], fc, kc});
                            remaining = rest;
                            found = true;
                        }
                    }
                if (!found) throw std::logic_error("child split reconstruction failed");
            }
        }
    }
};

}  // namespace

RootedTree root_tree(const Graph& g, int root) {
    g.check_vertex(root);
    if (!is_tree(g)) throw std::invalid_argument("graph is not a tree");
    return root_component(g, root);
}

CoverageProfile tree_profile(const Graph& g) {
    ForestDp dp(g);
    std::vector<int> prof = dp.forest_profile();
    return CoverageProfile::from_opt(std::move(prof), false);
}

PvcSolution solve_pvc_tree(const PvcInstance& inst) {
    const Graph& g = inst.graph;
    if (inst.t < 0) throw InfeasibleError("coverage target must be >= 0");
    if (inst.t > g.m())
        throw InfeasibleError("coverage target " + std::to_string(inst.t) +
                              " exceeds edge count " + std::to_string(g.m()));

    ForestDp dp(g);
    std::vector<int> prof = dp.forest_profile();

    PvcSolution sol;
    sol.t = inst.t;
    if (inst.t == 0) return sol;

    int k_star = 0;
    while (prof[k_star] < inst.t) ++k_star;
    sol.vertices = dp.reconstruct(k_star);
    sol.size = static_cast<int>(sol.vertices.size());
    sol.covered = coverage(g, sol.vertices);
    if (sol.size != k_star || sol.covered < inst.t)
        throw std::logic_error("tree witness validation failed");
    return sol;
}

}  // namespace pvc
