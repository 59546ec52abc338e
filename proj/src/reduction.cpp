#include "pvc/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pvc {

namespace {

long long pairs_of(long long k) { return k * (k - 1) / 2; }

void fill_parameters(ReductionArtifact& art) {
    art.budget = static_cast<int>(art.clique_k + art.source_m - pairs_of(art.clique_k));
    art.target_t = static_cast<int>(3LL * art.source_m - pairs_of(art.clique_k));
    art.precondition_warning = !(art.source_m > pairs_of(art.clique_k) && art.clique_k >= 5);
}

}  // namespace

ReductionArtifact reduce_clique_to_pvcb(const Graph& source, int k) {
    const int np = source.n();
    const int mp = source.m();
    if (k < 2 || k > np)
        throw std::invalid_argument("clique size k must be in [2, n'], got " + std::to_string(k));

    ReductionArtifact art{Graph(0, {}), {}, 0, 0, {}, {}, np, mp, k, false};
    art.source_edges = source.edges();
    fill_parameters(art);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(3 * mp);
    art.provenance.assign(np + 2 * mp + 1, {});
    for (int v = 1; v <= np; ++v) art.provenance[v] = {ProvKind::OriginalVertex, v};
    for (int q = 1; q <= mp; ++q) {
        auto [a, b] = source.edges()[q - 1];
        int block_left = np + 2 * q - 1;
        int block_right = np + 2 * q;
        art.provenance[block_left] = {ProvKind::EdgeBlockLeft, q};
        art.provenance[block_right] = {ProvKind::EdgeBlockRight, q};
        edges.emplace_back(block_left, block_right);
        edges.emplace_back(a, block_left);
        edges.emplace_back(b, block_left);
    }
    art.bipartite = Graph(np + 2 * mp, std::move(edges));
    art.labeling = bipartition(art.bipartite);
    return art;
}

std::vector<int> clique_to_cover(const ReductionArtifact& art, const std::vector<int>& clique) {
    if (static_cast<int>(clique.size()) != art.clique_k)
        throw std::invalid_argument("clique must have exactly k = " +
                                    std::to_string(art.clique_k) + " vertices");
    std::set<int> members(clique.begin(), clique.end());
    if (static_cast<int>(members.size()) != art.clique_k)
        throw std::invalid_argument("clique contains duplicate vertices");
    for (int v : clique)
        if (v < 1 || v > art.source_n)
            throw std::invalid_argument("clique vertex out of source range");
    std::set<std::pair<int, int>> source_edge_set(art.source_edges.begin(),
                                                  art.source_edges.end());
    for (int a : clique)
        for (int b : clique)
            if (a < b && !source_edge_set.count({a, b}))
                throw std::invalid_argument("input set is not a clique: missing edge (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");

    std::vector<int> cover(clique.begin(), clique.end());
    for (int q = 1; q <= art.source_m; ++q) {
        auto [a, b] = art.source_edges[q - 1];
        if (members.count(a) && members.count(b)) continue;  // inside the clique
        cover.push_back(art.source_n + 2 * q - 1);           // block-left vertex
    }
    std::sort(cover.begin(), cover.end());

    if (static_cast<int>(cover.size()) != art.budget)
        throw std::logic_error("mapped cover size != budget");
    if (coverage(art.bipartite, cover) < art.target_t)
        throw std::logic_error("mapped cover misses the coverage target");
    return cover;
}

namespace {

/// Any k-subset of source vertices that is pairwise adjacent, or empty.
std::vector<int> find_clique(const Graph& source, int k) {
    std::vector<std::vector<char>> adj(source.n() + 1, std::vector<char>(source.n() + 1, 0));
    for (auto [u, v] : source.edges()) adj[u][v] = adj[v][u] = 1;

    std::vector<int> chosen;
    auto recurse = [&](auto&& self, int next) -> bool {
        if (static_cast<int>(chosen.size()) == k) return true;
        for (int v = next; v <= source.n(); ++v) {
            bool ok = true;
            for (int u : chosen)
                if (!adj[u][v]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            if (self(self, v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!recurse(recurse, 1)) return {};
    return chosen;
}

}  // namespace

VerificationResult verify_reduction_detail(const Graph& source, int k, int oracle_max_n,
                                           bool want_cover_witness) {
    if (source.n() > 8)
        throw SizeGuardError("clique enumeration is limited to 8 source vertices");
    ReductionArtifact art = reduce_clique_to_pvcb(source, k);

    VerificationResult result;
    result.clique = find_clique(source, k);
    result.clique_exists = !result.clique.empty();

    if (art.budget < 0) {
        result.pvcb_feasible = false;
    } else if (art.target_t <= 0) {
        result.pvcb_feasible = true;  // the empty set already qualifies
    } else {
        const Graph& reduced = art.bipartite;
        int cap = std::min(art.budget, reduced.n());
        CoverageProfile prof = opt_profile(reduced, cap, oracle_max_n);
        result.pvcb_feasible = prof.opt[cap] >= art.target_t;
    }
    result.equivalent = result.clique_exists == result.pvcb_feasible;

    if (result.clique_exists) {
        result.cover = clique_to_cover(art, result.clique);
    } else if (result.pvcb_feasible && want_cover_witness && art.target_t > 0) {
        PvcSolution sol =
            solve_pvc_bruteforce({art.bipartite, art.target_t}, oracle_max_n);
        result.cover = sol.vertices;
    }
    return result;
}

bool verify_reduction(const Graph& source, int k, int oracle_max_n) {
    return verify_reduction_detail(source, k, oracle_max_n).equivalent;
}

void write_artifact(const ReductionArtifact& art, std::ostream& out) {
    out << "c pvcb-reduction 1\n";
    out << "c source " << art.source_n << ' ' << art.source_m << '\n';
    out << "c clique-k " << art.clique_k << '\n';
    out << "c budget " << art.budget << '\n';
    out << "c target " << art.target_t << '\n';
    for (int v = 1; v <= art.bipartite.n(); ++v) {
        const auto& p = art.provenance[v];
        out << "c provenance " << v << ' ';
        switch (p.kind) {
            case ProvKind::OriginalVertex: out << "original"; break;
            case ProvKind::EdgeBlockLeft: out << "block-left"; break;
            case ProvKind::EdgeBlockRight: out << "block-right"; break;
        }
        out << ' ' << p.ref << '\n';
    }
    write_graph(art.bipartite, out);
}

std::string write_artifact(const ReductionArtifact& art) {
    std::ostringstream out;
    write_artifact(art, out);
    return out.str();
}

ReductionArtifact load_artifact(std::istream& in) {
    // First pass: collect the metadata comments while buffering the text for
    // the graph parser (which ignores comments).
    std::ostringstream buffer;
    std::string line;
    bool versioned = false;
    int source_n = -1, source_m = -1, clique_k = -1, budget = 0, target = 0;
    bool have_budget = false, have_target = false;
    std::map<int, VertexProvenance> prov;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        buffer << line << '\n';
        std::istringstream ss(line);
        std::string tag, kind;
        if (!(ss >> tag) || tag != "c") continue;
        if (!(ss >> kind)) continue;
        if (kind == "pvcb-reduction") {
            versioned = true;
        } else if (kind == "source") {
            if (!(ss >> source_n >> source_m)) throw ParseError(lineno, "bad source line");
        } else if (kind == "clique-k") {
            if (!(ss >> clique_k)) throw ParseError(lineno, "bad clique-k line");
        } else if (kind == "budget") {
            if (!(ss >> budget)) throw ParseError(lineno, "bad budget line");
            have_budget = true;
        } else if (kind == "target") {
            if (!(ss >> target)) throw ParseError(lineno, "bad target line");
            have_target = true;
        } else if (kind == "provenance") {
            int v = 0, ref = 0;
            std::string w;
            if (!(ss >> v >> w >> ref)) throw ParseError(lineno, "bad provenance line");
            ProvKind pk;
            if (w == "original")
                pk = ProvKind::OriginalVertex;
            else if (w == "block-left")
                pk = ProvKind::EdgeBlockLeft;
            else if (w == "block-right")
                pk = ProvKind::EdgeBlockRight;
            else
                throw ParseError(lineno, "unknown provenance kind '" + w + "'");
            if (!prov.emplace(v, VertexProvenance{pk, ref}).second)
                throw ParseError(lineno, "duplicate provenance for vertex");
        }
    }
    if (!versioned) throw ParseError(1, "missing 'c pvcb-reduction 1' marker");
    if (source_n < 0 || clique_k < 0 || !have_budget || !have_target)
        throw ParseError(lineno, "incomplete reduction metadata");

    ReductionArtifact art{parse_graph(buffer.str()), {}, 0, 0, {}, {}, source_n, source_m,
                          clique_k, false};
    const Graph& g = art.bipartite;
    if (g.n() != source_n + 2 * source_m || g.m() != 3 * source_m)
        throw std::invalid_argument("artifact size does not match n'+2m' / 3m'");
    if (static_cast<int>(prov.size()) != g.n())
        throw std::invalid_argument("provenance must cover every vertex");

    art.provenance.assign(g.n() + 1, {});
    std::vector<int> left_of_edge(source_m + 1, 0);
    for (auto& [v, p] : prov) {
        if (v < 1 || v > g.n()) throw std::invalid_argument("provenance vertex out of range");
        art.provenance[v] = p;
        if (p.kind == ProvKind::OriginalVertex) {
            if (v != p.ref || v > source_n)
                throw std::invalid_argument("original-vertex provenance must be the identity map");
        } else {
            if (p.ref < 1 || p.ref > source_m)
                throw std::invalid_argument("block provenance references a bad source edge");
            int expect = source_n + 2 * p.ref - (p.kind == ProvKind::EdgeBlockLeft ? 1 : 0);
            if (v != expect) throw std::invalid_argument("block vertex id out of layout");
            if (p.kind == ProvKind::EdgeBlockLeft) left_of_edge[p.ref] = v;
        }
    }

    // Reconstruct the source edges from the incidence structure and
    // revalidate the degree shape of every block.
    art.source_edges.assign(source_m, {0, 0});
    for (int q = 1; q <= source_m; ++q) {
        int bl = left_of_edge[q];
        if (bl == 0) throw std::invalid_argument("missing block-left vertex");
        if (g.degree(bl) != 3) throw std::invalid_argument("block-left vertex must have degree 3");
        int br = bl + 1;
        if (g.degree(br) != 1 || g.neighbors(br)[0] != bl)
            throw std::invalid_argument("block-right vertex must hang off the block-left one");
        std::vector<int> images;
        for (int u : g.neighbors(bl))
            if (u <= source_n) images.push_back(u);
        if (images.size() != 2) throw std::invalid_argument("block must touch two vertex images");
        art.source_edges[q - 1] = {images[0], images[1]};
    }

    fill_parameters(art);
    if (art.budget != budget || art.target_t != target)
        throw std::invalid_argument("budget/target metadata disagrees with the construction");
    art.labeling = bipartition(art.bipartite);
    return art;
}

}  // namespace pvc
