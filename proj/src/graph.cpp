#include "pvc/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <queue>
#include <set>
#include <sstream>

namespace pvc {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<int> weights)
    : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (!weights.empty() && static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("weight vector must have one entry per vertex");

    weights_.assign(n + 1, 1);
    for (int v = 1; v <= n; ++v) {
        if (!weights.empty()) weights_[v] = weights[v - 1];
        if (weights_[v] < 1) throw std::invalid_argument("vertex weights must be >= 1");
        if (weights_[v] != 1) unit_weights_ = false;
    }

    adjacency_.assign(n + 1, {});
    std::set<std::pair<int, int>> seen;
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        auto e = std::minmax(u, v);
        if (!seen.insert(e).second) throw std::invalid_argument("duplicate edge");
        edges_.emplace_back(e.first, e.second);
        adjacency_[e.first].push_back(e.second);
        adjacency_[e.second].push_back(e.first);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adjacency_[v];
}

int Graph::weight(int v) const {
    check_vertex(v);
    return weights_[v];
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 1; v <= n_; ++v) d = std::max(d, static_cast<int>(adjacency_[v].size()));
    return d;
}

long long Graph::total_weight() const {
    long long w = 0;
    for (int v = 1; v <= n_; ++v) w += weights_[v];
    return w;
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw std::out_of_range("vertex id " + std::to_string(v) + " out of range [1," +
                                std::to_string(n_) + "]");
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& s, int lineno, const char* what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        if (v < INT32_MIN || v > INT32_MAX) throw std::out_of_range("");
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw ParseError(lineno, std::string("expected integer for ") + what + ", got '" + s + "'");
    }
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0, m = 0;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    std::vector<int> weights;
    std::vector<bool> weight_set;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_tokens(line);
        if (toks.empty()) continue;
        const std::string& kind = toks[0];
        if (kind == "c") continue;
        if (kind == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (toks.size() != 4 || toks[1] != "pvc")
                throw ParseError(lineno, "header must be 'p pvc <n> <m>'");
            n = parse_int(toks[2], lineno, "n");
            m = parse_int(toks[3], lineno, "m");
            if (n < 0 || m < 0) throw ParseError(lineno, "n and m must be nonnegative");
            have_header = true;
            weights.assign(n, 1);
            weight_set.assign(n + 1, false);
            continue;
        }
        if (!have_header) throw ParseError(lineno, "expected 'p pvc <n> <m>' header first");
        if (kind == "e") {
            if (toks.size() != 3) throw ParseError(lineno, "edge line must be 'e <u> <v>'");
            int u = parse_int(toks[1], lineno, "u");
            int v = parse_int(toks[2], lineno, "v");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "edge endpoint out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            auto e = std::minmax(u, v);
            if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
            edges.emplace_back(e);
        } else if (kind == "w") {
            if (toks.size() != 3) throw ParseError(lineno, "weight line must be 'w <u> <weight>'");
            int u = parse_int(toks[1], lineno, "u");
            int wt = parse_int(toks[2], lineno, "weight");
            if (u < 1 || u > n) throw ParseError(lineno, "weight vertex out of range");
            if (wt < 1) throw ParseError(lineno, "weight must be >= 1");
            if (weight_set[u]) throw ParseError(lineno, "duplicate weight for vertex");
            weight_set[u] = true;
            weights[u - 1] = wt;
        } else {
            throw ParseError(lineno, "unknown directive '" + kind + "'");
        }
    }
    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    return Graph(n, std::move(edges), std::move(weights));
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
    out << "p pvc " << g.n() << ' ' << g.m() << '\n';
    for (int v = 1; v <= g.n(); ++v)
        if (g.weight(v) != 1) out << "w " << v << ' ' << g.weight(v) << '\n';
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) out << "e " << u << ' ' << v << '\n';
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    write_graph(g, out);
    return out.str();
}

BipartiteLabeling bipartition(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(n + 1, -1);   // -1 unvisited, 0 Left, 1 Right
    std::vector<int> parent(n + 1, 0);
    std::vector<int> depth(n + 1, 0);

    for (int root = 1; root <= n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    // Conflict edge (u,v): walk both BFS-tree paths up to the
                    // lowest common ancestor and splice the odd cycle.
                    std::vector<int> pu{u}, pv{v};
                    int a = u, b = v;
                    while (depth[a] > depth[b]) pu.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) pv.push_back(b = parent[b]);
                    while (a != b) {
                        pu.push_back(a = parent[a]);
                        pv.push_back(b = parent[b]);
                    }
                    // pu ends at the LCA, pv's last entry duplicates it.
                    std::vector<int> cycle(pu.rbegin(), pu.rend());
                    cycle.insert(cycle.end(), pv.begin(), pv.end() - 1);
                    assert(cycle.size() % 2 == 1);
                    throw NonBipartiteError(std::move(cycle));
                }
            }
        }
    }

    BipartiteLabeling lab;
    lab.side.assign(n + 1, Side::Left);
    for (int v = 1; v <= n; ++v) lab.side[v] = color[v] == 0 ? Side::Left : Side::Right;
    return lab;
}

int coverage(const Graph& g, const std::vector<int>& s) {
    std::vector<char> in_set(g.n() + 1, 0);
    for (int v : s) {
        g.check_vertex(v);
        in_set[v] = 1;
    }
    int covered = 0;
    for (auto [u, v] : g.edges())
        if (in_set[u] || in_set[v]) ++covered;
    return covered;
}

namespace {

int component_count(const Graph& g) {
    const int n = g.n();
    std::vector<char> vis(n + 1, 0);
    int comps = 0;
    for (int root = 1; root <= n; ++root) {
        if (vis[root]) continue;
        ++comps;
        std::deque<int> queue{root};
        vis[root] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u))
                if (!vis[v]) {
                    vis[v] = 1;
                    queue.push_back(v);
                }
        }
    }
    return comps;
}

}  // namespace

bool is_tree(const Graph& g) {
    return g.n() >= 1 && g.m() == g.n() - 1 && component_count(g) == 1;
}

bool is_forest(const Graph& g) {
    return g.m() == g.n() - component_count(g);
}

Graph fixture_mnc_counterexample() {
    std::vector<std::pair<int, int>> edges;
    for (int a : {1, 2, 3})
        for (int b : {4, 5, 6}) edges.emplace_back(a, b);
    edges.insert(edges.end(), {{1, 7}, {1, 8}, {2, 9}, {2, 10}, {3, 11}, {3, 12}});
    edges.insert(edges.end(), {{4, 13}, {4, 14}, {4, 15}, {5, 16}});
    return Graph(16, std::move(edges));
}

Graph fixture_weighted_spider() {
    std::vector<std::pair<int, int>> edges{{1, 4}, {2, 4}, {3, 4}, {4, 5},
                                           {5, 6}, {5, 7}, {5, 8}, {5, 9}};
    std::vector<int> weights(9, 1);
    weights[4] = 2;  // vertex 5
    return Graph(9, std::move(edges), std::move(weights));
}

Graph gen_random_tree(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree size must be >= 1");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{1, 2}});

    Rng rng(seed);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = rng.range(1, n);

    // Pruefer decode with a min-heap of current leaves.
    std::vector<int> deg(n + 1, 1);
    for (int x : seq) ++deg[x];
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 1; v <= n; ++v)
        if (deg[v] == 1) leaves.push(v);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int x : seq) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--deg[x] == 1) leaves.push(x);
    }
    int u = leaves.top();
    leaves.pop();
    int v = leaves.top();
    edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph gen_random_bipartite(int nl, int nr, int max_degree, int edge_prob_control,
                           uint64_t seed) {
    if (nl < 1 || nr < 1) throw std::invalid_argument("both sides need at least one vertex");
    if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
    int p = std::clamp(edge_prob_control, 0, 100);

    Rng rng(seed);
    long long attempts = (static_cast<long long>(nl) * nr * p + 99) / 100;
    std::set<std::pair<int, int>> chosen;
    std::vector<int> deg(nl + nr + 1, 0);
    for (long long a = 0; a < attempts; ++a) {
        int u = rng.range(1, nl);
        int v = nl + rng.range(1, nr);
        if (deg[u] >= max_degree || deg[v] >= max_degree) continue;
        if (!chosen.emplace(u, v).second) continue;
        ++deg[u];
        ++deg[v];
    }
    std::vector<std::pair<int, int>> edges(chosen.begin(), chosen.end());
    return Graph(nl + nr, std::move(edges));
}

}  // namespace pvc
