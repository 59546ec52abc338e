#include "pvc/oracle.hpp"

#include <algorithm>

namespace pvc {

CoverageProfile CoverageProfile::from_opt(std::vector<int> opt_values, bool weighted_flag) {
    CoverageProfile p;
    p.opt = std::move(opt_values);
    p.weighted = weighted_flag;
    p.marginals.assign(p.opt.size(), 0);
    for (size_t k = 1; k < p.opt.size(); ++k) p.marginals[k] = p.opt[k] - p.opt[k - 1];
    return p;
}

namespace {

void check_guard(const Graph& g, int max_n) {
    if (g.n() > max_n)
        throw SizeGuardError("instance has " + std::to_string(g.n()) +
                             " vertices, enumeration guard is " + std::to_string(max_n) +
                             " (override to proceed)");
}

void check_unit(const Graph& g) {
    if (!g.unit_weights())
        throw std::invalid_argument("weighted graph passed to a unit-weight computation");
}

/// Shared enumeration state. Vertices are explored in ascending id order,
/// include-first, so the first subset reaching a given (size, coverage) is
/// the lexicographically smallest one.
struct Enumerator {
    const Graph& g;
    std::vector<std::vector<int>> incident;  // vertex -> incident edge indices
    std::vector<int> cover_count;            // edge -> endpoints currently chosen
    // top_deg_sum[i][q] = sum of the q largest degrees among vertices i..n
    std::vector<std::vector<long long>> top_deg_sum;
    int covered = 0;

    explicit Enumerator(const Graph& graph) : g(graph) {
        const int n = g.n();
        incident.assign(n + 1, {});
        for (int e = 0; e < g.m(); ++e) {
            incident[g.edges()[e].first].push_back(e);
            incident[g.edges()[e].second].push_back(e);
        }
        cover_count.assign(g.m(), 0);
        top_deg_sum.assign(n + 2, {});
        for (int i = 1; i <= n + 1; ++i) {
            std::vector<int> degs;
            for (int v = i; v <= n; ++v) degs.push_back(g.degree(v));
            std::sort(degs.rbegin(), degs.rend());
            auto& sums = top_deg_sum[i];
            sums.assign(degs.size() + 1, 0);
            for (size_t q = 0; q < degs.size(); ++q) sums[q + 1] = sums[q] + degs[q];
        }
    }

    void take(int v) {
        for (int e : incident[v])
            if (cover_count[e]++ == 0) ++covered;
    }
    void untake(int v) {
        for (int e : incident[v])
            if (--cover_count[e] == 0) --covered;
    }
    /// Upper bound on coverage after adding q more vertices from ids >= idx.
    int bound(int idx, int q) const {
        long long extra = q < static_cast<int>(top_deg_sum[idx].size())
                              ? top_deg_sum[idx][q]
                              : top_deg_sum[idx].back();
        return static_cast<int>(std::min<long long>(g.m(), covered + extra));
    }
};

struct ProfileSearch {
    Enumerator en;
    std::vector<int> best;
    int k_max;

    ProfileSearch(const Graph& g, int k_max_) : en(g), k_max(k_max_) {
        best.assign(k_max + 1, -1);
    }

    void run() { recurse(1, 0); }

    void recurse(int idx, int size) {
        if (en.covered > best[size]) best[size] = en.covered;
        if (idx > en.g.n() || size == k_max) return;
        // Prune when no reachable size can strictly improve.
        bool improvable = false;
        int reach = std::min(k_max, size + (en.g.n() - idx + 1));
        for (int k = size + 1; k <= reach; ++k) {
            if (en.bound(idx, k - size) > best[k]) {
                improvable = true;
                break;
            }
        }
        if (!improvable) return;
        en.take(idx);
        recurse(idx + 1, size + 1);
        en.untake(idx);
        recurse(idx + 1, size);
    }
};

}  // namespace

CoverageProfile opt_profile(const Graph& g, int k_max, int max_n) {
    check_unit(g);
    check_guard(g, max_n);
    if (k_max < 0 || k_max > g.n())
        throw std::invalid_argument("k_max must be in [0, n]");

    ProfileSearch search(g, k_max);
    search.run();
    // Adding vertices never hurts, so each level is at least the previous.
    for (int k = 1; k <= k_max; ++k)
        search.best[k] = std::max(search.best[k], search.best[k - 1]);
    return CoverageProfile::from_opt(std::move(search.best), false);
}

CoverageProfile opt_profile(const Graph& g) { return opt_profile(g, g.n()); }

CoverageProfile weighted_profile(const Graph& g, int budget_max, int max_n) {
    check_guard(g, max_n);
    if (budget_max < 0) throw std::invalid_argument("budget_max must be >= 0");

    // best-at-exact-weight; prefix-max afterwards gives "weight <= k".
    std::vector<int> best(budget_max + 1, -1);
    best[0] = 0;
    Enumerator en(g);
    auto recurse = [&](auto&& self, int idx, long long weight) -> void {
        if (weight <= budget_max && en.covered > best[weight])
            best[static_cast<int>(weight)] = en.covered;
        if (idx > g.n()) return;
        if (en.bound(idx, g.n() - idx + 1) <= *std::min_element(best.begin() + weight, best.end()))
            return;
        if (weight + g.weight(idx) <= budget_max) {
            en.take(idx);
            self(self, idx + 1, weight + g.weight(idx));
            en.untake(idx);
        }
        self(self, idx + 1, weight);
    };
    recurse(recurse, 1, 0);
    for (int k = 1; k <= budget_max; ++k) best[k] = std::max(best[k], best[k - 1]);
    return CoverageProfile::from_opt(std::move(best), true);
}

MncReport check_mnc(const CoverageProfile& p) {
    MncReport report;
    for (size_t k = 1; k + 1 < p.marginals.size(); ++k) {
        if (p.marginals[k + 1] > p.marginals[k]) {
            report.holds = false;
            report.first_violation = static_cast<int>(k);
            break;
        }
    }
    return report;
}

namespace {

/// Lexicographically-first subset of size exactly k covering >= t edges.
struct WitnessSearch {
    Enumerator en;
    int k, t;
    std::vector<int> chosen, result;

    WitnessSearch(const Graph& g, int k_, int t_) : en(g), k(k_), t(t_) {}

    bool run() { return recurse(1); }

    bool recurse(int idx) {
        int size = static_cast<int>(chosen.size());
        if (size == k) {
            if (en.covered >= t) {
                result = chosen;
                return true;
            }
            return false;
        }
        if (idx > en.g.n() || en.g.n() - idx + 1 < k - size) return false;
        if (en.bound(idx, k - size) < t) return false;
        chosen.push_back(idx);
        en.take(idx);
        if (recurse(idx + 1)) return true;
        en.untake(idx);
        chosen.pop_back();
        return recurse(idx + 1);
    }
};

}  // namespace

PvcSolution solve_pvc_bruteforce(const PvcInstance& inst, int max_n) {
    const Graph& g = inst.graph;
    check_unit(g);
    check_guard(g, max_n);
    if (inst.t < 0) throw InfeasibleError("coverage target must be >= 0");
    if (inst.t > g.m())
        throw InfeasibleError("coverage target " + std::to_string(inst.t) + " exceeds edge count " +
                              std::to_string(g.m()));

    PvcSolution sol;
    sol.t = inst.t;
    if (inst.t == 0) return sol;

    CoverageProfile profile = opt_profile(g, g.n(), max_n);
    int k_star = 0;
    while (profile.opt[k_star] < inst.t) ++k_star;

    WitnessSearch search(g, k_star, inst.t);
    if (!search.run())
        throw std::logic_error("profile promised a solution of size " + std::to_string(k_star) +
                               " but the witness search found none");
    sol.vertices = search.result;
    sol.size = k_star;
    sol.covered = coverage(g, sol.vertices);
    if (sol.covered < inst.t) throw std::logic_error("witness coverage below target");
    return sol;
}

}  // namespace pvc
