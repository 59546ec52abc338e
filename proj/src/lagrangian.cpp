#include "pvc/lagrangian.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

namespace pvc {

namespace {

void check_inputs(const Graph& g, const BipartiteLabeling& lab, ThresholdParam p) {
    if (!g.unit_weights())
        throw std::invalid_argument("the threshold solver requires unit vertex weights");
    if (static_cast<int>(lab.side.size()) != g.n() + 1)
        throw std::invalid_argument("labeling does not match the graph");
    if (p.j < 0) throw std::invalid_argument("threshold index must be >= 0");
    for (auto [u, v] : g.edges())
        if (lab.side[u] == lab.side[v])
            throw std::invalid_argument("labeling has a same-side edge");
}

}  // namespace

FlowNetwork build_lagrangian_network(const Graph& g, const BipartiteLabeling& lab,
                                     ThresholdParam p) {
    check_inputs(g, lab, p);
    const int n = g.n();
    const long long vertex_cap = 2LL * p.j + 1;

    FlowNetwork net;
    net.node_count = n + 2;
    net.source = 0;
    net.sink = n + 1;
    for (int v = 1; v <= n; ++v) {
        if (lab.is_left(v))
            net.arcs.push_back({net.source, v, vertex_cap});
        else
            net.arcs.push_back({v, net.sink, vertex_cap});
    }
    for (auto [u, v] : g.edges()) {
        int left = lab.is_left(u) ? u : v;
        int right = lab.is_left(u) ? v : u;
        net.arcs.push_back({left, right, 2});
    }
    return net;
}

namespace {

LagrangianSolution decode_cut(const Graph& g, const BipartiteLabeling& lab, ThresholdParam p,
                              const CutResult& cut, bool wide_side) {
    LagrangianSolution sol;
    std::vector<char> selected(g.n() + 1, 0);
    for (int v = 1; v <= g.n(); ++v) {
        bool in_cut_side = wide_side ? cut.wide_source_side(v) : cut.source_side(v);
        if (lab.is_left(v) ? !in_cut_side : in_cut_side) {
            selected[v] = 1;
            sol.selected.push_back(v);
        }
    }
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges()[e];
        if (!selected[u] && !selected[v]) sol.uncovered_edges.push_back(e);
    }
    sol.k = static_cast<int>(sol.selected.size());
    sol.scaled_objective = cut.max_flow_value;

    long long recomputed =
        (2LL * p.j + 1) * sol.k + 2LL * static_cast<long long>(sol.uncovered_edges.size());
    if (recomputed != sol.scaled_objective)
        throw std::logic_error("cut decoding mismatch: flow " +
                               std::to_string(sol.scaled_objective) + " vs objective " +
                               std::to_string(recomputed));
    return sol;
}

/// Canonical solution plus the one decoded from the widest min cut. Both are
/// optimal; they differ only when the subproblem has several optima.
std::pair<LagrangianSolution, LagrangianSolution> solve_lagrangian_extremes(
    const Graph& g, const BipartiteLabeling& lab, ThresholdParam p) {
    FlowNetwork net = build_lagrangian_network(g, lab, p);
    CutResult cut = max_flow_min_cut(net);
    return {decode_cut(g, lab, p, cut, false), decode_cut(g, lab, p, cut, true)};
}

}  // namespace

LagrangianSolution solve_lagrangian(const Graph& g, const BipartiteLabeling& lab,
                                    ThresholdParam p) {
    FlowNetwork net = build_lagrangian_network(g, lab, p);
    CutResult cut = max_flow_min_cut(net);
    return decode_cut(g, lab, p, cut, false);
}

std::vector<CurvePoint> selected_count_curve(const Graph& g, const BipartiteLabeling& lab) {
    std::vector<CurvePoint> curve;
    const int max_j = g.max_degree();
    for (int j = 0; j <= max_j; ++j) {
        LagrangianSolution sol = solve_lagrangian(g, lab, {j});
        curve.push_back({j, sol.k, g.m() - static_cast<int>(sol.uncovered_edges.size())});
    }
    return curve;
}

namespace {

PvcSolution make_solution(const Graph& g, std::vector<int> vertices, int t) {
    PvcSolution sol;
    sol.vertices = std::move(vertices);
    std::sort(sol.vertices.begin(), sol.vertices.end());
    sol.size = static_cast<int>(sol.vertices.size());
    sol.covered = coverage(g, sol.vertices);
    sol.t = t;
    return sol;
}

/// Removes |start| - k_star vertices, each time the one whose removal loses
/// the fewest covered edges (ties: the largest id goes).
std::vector<int> peel_witness(const Graph& g, const std::vector<int>& start, int k_star) {
    std::vector<char> in_set(g.n() + 1, 0);
    for (int v : start) in_set[v] = 1;
    std::vector<int> current = start;

    auto loss_of = [&](int v) {
        int loss = 0;
        for (int u : g.neighbors(v))
            if (!in_set[u]) ++loss;
        return loss;
    };

    while (static_cast<int>(current.size()) > k_star) {
        int best_v = -1, best_loss = 0;
        for (int v : current) {
            int loss = loss_of(v);
            if (best_v == -1 || loss < best_loss || (loss == best_loss && v > best_v)) {
                best_v = v;
                best_loss = loss;
            }
        }
        in_set[best_v] = 0;
        current.erase(std::find(current.begin(), current.end(), best_v));
    }
    return current;
}

/// Grows the start set to k_star vertices, each time adding the vertex with
/// the largest coverage gain (ties: the smallest id).
std::vector<int> augment_witness(const Graph& g, const std::vector<int>& start, int k_star) {
    std::vector<char> in_set(g.n() + 1, 0);
    std::vector<char> edge_covered(g.m(), 0);
    for (int v : start) in_set[v] = 1;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges()[e];
        edge_covered[e] = in_set[u] || in_set[v];
    }
    std::vector<std::vector<int>> incident(g.n() + 1);
    for (int e = 0; e < g.m(); ++e) {
        incident[g.edges()[e].first].push_back(e);
        incident[g.edges()[e].second].push_back(e);
    }

    std::vector<int> current = start;
    while (static_cast<int>(current.size()) < k_star) {
        int best_v = -1, best_gain = -1;
        for (int v = 1; v <= g.n(); ++v) {
            if (in_set[v]) continue;
            int gain = 0;
            for (int e : incident[v])
                if (!edge_covered[e]) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best_v = v;
            }
        }
        in_set[best_v] = 1;
        for (int e : incident[best_v]) edge_covered[e] = 1;
        current.push_back(best_v);
    }
    return current;
}

}  // namespace

PvcSolution solve_pvc_mnc(const PvcInstance& inst, const BipartiteLabeling& lab,
                          MncSolveTrace* trace) {
    const Graph& g = inst.graph;
    const int m = g.m();
    if (inst.t < 0) throw InfeasibleError("coverage target must be >= 0");
    if (inst.t > m)
        throw InfeasibleError("coverage target " + std::to_string(inst.t) +
                              " exceeds edge count " + std::to_string(m));
    if (trace) *trace = {};
    if (inst.t == 0) return make_solution(g, {}, 0);

    std::map<int, std::pair<LagrangianSolution, LagrangianSolution>> solved;
    auto extremes = [&](int j) -> const std::pair<LagrangianSolution, LagrangianSolution>& {
        auto it = solved.find(j);
        if (it == solved.end())
            it = solved.emplace(j, solve_lagrangian_extremes(g, lab, {j})).first;
        return it->second;
    };
    auto at = [&](int j) -> const LagrangianSolution& { return extremes(j).first; };
    auto covered_by = [&](const LagrangianSolution& s) {
        return m - static_cast<int>(s.uncovered_edges.size());
    };

    // Coverage is m at j = 0 (no edge is worth a penalty of 2 against a
    // vertex of cost 1) and 0 at j = max_degree, so a bracket always exists.
    const int max_j = g.max_degree();
    if (covered_by(at(0)) == inst.t) {
        if (trace) trace->exact_hit = true;
        return make_solution(g, at(0).selected, inst.t);
    }
    int lo = 0, hi = max_j;
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        int c = covered_by(at(mid));
        if (c == inst.t) {
            if (trace) trace->exact_hit = true;
            return make_solution(g, at(mid).selected, inst.t);
        }
        (c > inst.t ? lo : hi) = mid;
    }
    const int j2 = lo, j1 = hi;
    const LagrangianSolution& dense = at(j2);
    const LagrangianSolution& sparse = at(j1);
    const int c2 = covered_by(dense), c1 = covered_by(sparse);
    if (c2 == inst.t) {
        if (trace) trace->exact_hit = true;
        return make_solution(g, dense.selected, inst.t);
    }
    if (c1 == inst.t) {
        if (trace) trace->exact_hit = true;
        return make_solution(g, sparse.selected, inst.t);
    }
    if (!(c1 < inst.t && inst.t < c2))
        throw MncViolationError("threshold search failed to bracket the target (coverage " +
                                std::to_string(c1) + " / " + std::to_string(c2) +
                                " around t=" + std::to_string(inst.t) +
                                "); the instance lacks nonincreasing marginals");

    // Between the two thresholds every additional vertex gains exactly
    // j2 + 1 edges (the unique integer between j2 + 1/2 and j1 + 1/2).
    const int gain = j2 + 1;
    const int k1 = sparse.k, t1 = c1;
    const int k_star = k1 + (inst.t - t1 + gain - 1) / gain;
    if (trace) {
        trace->case2 = true;
        trace->j1 = j1;
        trace->j2 = j2;
        trace->k1 = k1;
        trace->t1 = t1;
        trace->k_star = k_star;
    }

    // Witness extraction. Max-coverage sets of different sizes need not be
    // nested, so a single peel can dead-end even on concave instances; try
    // peeling both extreme dense solutions and growing both extreme sparse
    // ones, in a fixed order, and validate whatever comes out.
    const LagrangianSolution& dense_wide = extremes(j2).second;
    const LagrangianSolution& sparse_wide = extremes(j1).second;
    auto attempt = [&](const std::vector<int>& witness) -> std::optional<PvcSolution> {
        PvcSolution sol = make_solution(g, witness, inst.t);
        if (sol.covered >= inst.t && sol.size == k_star) return sol;
        return std::nullopt;
    };
    for (const LagrangianSolution* from : {&dense, &dense_wide}) {
        if (from->k < k_star) continue;
        if (auto sol = attempt(peel_witness(g, from->selected, k_star))) return *sol;
    }
    for (const LagrangianSolution* from : {&sparse, &sparse_wide}) {
        if (from->k > k_star) continue;
        if (auto sol = attempt(augment_witness(g, from->selected, k_star))) return *sol;
    }
    throw MncViolationError("no witness of size " + std::to_string(k_star) +
                            " covering " + std::to_string(inst.t) +
                            " edges was reachable from the bracketing solutions; the instance "
                            "lacks nonincreasing marginals");
}

}  // namespace pvc
