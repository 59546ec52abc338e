#ifndef PVC_GRAPH_HPP
#define PVC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pvc {

/// Thrown by parse_graph on malformed input. `line` is 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// Thrown by bipartition when the graph contains an odd cycle.
/// `odd_cycle` lists the cycle's vertices in order (odd length).
struct NonBipartiteError : std::runtime_error {
    std::vector<int> odd_cycle;
    explicit NonBipartiteError(std::vector<int> cycle)
        : std::runtime_error("graph is not bipartite (odd cycle of length " +
                             std::to_string(cycle.size()) + ")"),
          odd_cycle(std::move(cycle)) {}
};

/// Undirected simple graph with positive integer vertex weights.
/// Vertex ids are 1-based. Immutable after construction; all invariants
/// (no self-loops, no duplicate edges, ids in range, weights >= 1) are
/// enforced by the constructor.
class Graph {
  public:
    /// Builds a graph. `edges` may list each unordered pair in either
    /// orientation; pairs are normalized to (min,max). `weights` is either
    /// empty (all 1) or has exactly n entries for vertices 1..n.
    Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<int> weights = {});

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    /// Neighbor list of v, ascending.
    const std::vector<int>& neighbors(int v) const;
    int weight(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;
    bool unit_weights() const { return unit_weights_; }
    long long total_weight() const;

    void check_vertex(int v) const;

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> weights_;               // index 0 unused
    std::vector<std::vector<int>> adjacency_;  // index 0 unused
    bool unit_weights_ = true;
};

enum class Side : uint8_t { Left, Right };

/// Proper 2-coloring of a bipartite graph; side[v] for v in 1..n
/// (index 0 unused). Every edge joins a Left vertex to a Right vertex.
struct BipartiteLabeling {
    std::vector<Side> side;
    bool is_left(int v) const { return side[v] == Side::Left; }
};

/// A partial-cover instance: cover at least t edges of `graph`.
struct PvcInstance {
    Graph graph;
    int t = 0;
};

/// Parses the line-oriented graph file format:
///   c <comment>            ignored
///   p pvc <n> <m>          exactly one header, first non-comment line
///   e <u> <v>              m edge lines, 1 <= u,v <= n, u != v
///   w <u> <weight>         optional, weight >= 1 (absent means 1)
/// Throws ParseError with the offending line number.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

/// Canonical writer: header line, then `w` lines for non-unit weights in
/// ascending vertex order, then `e u v` lines with u < v in ascending
/// (u,v) order. Single spaces, '\n' terminators. Byte-stable.
void write_graph(const Graph& g, std::ostream& out);
std::string write_graph(const Graph& g);

/// Deterministic BFS 2-coloring. Components are processed in ascending
/// order of their smallest vertex, which becomes a Left root; neighbor
/// expansion is in ascending id order. Isolated vertices end up Left.
/// Throws NonBipartiteError with an odd-cycle witness otherwise.
BipartiteLabeling bipartition(const Graph& g);

/// Number of edges with at least one endpoint in `s`.
/// Throws std::out_of_range on an invalid vertex id.
int coverage(const Graph& g, const std::vector<int>& s);

/// True iff g is connected and m = n - 1.
bool is_tree(const Graph& g);

/// True iff g has no cycle (tree or forest).
bool is_forest(const Graph& g);

/// 16-vertex, 19-edge bipartite graph whose coverage marginals are not
/// nonincreasing: complete bipartite edges between {1,2,3} and {4,5,6},
/// pendant vertices 7,8 on 1; 9,10 on 2; 11,12 on 3; 13,14,15 on 4; 16 on 5.
Graph fixture_mnc_counterexample();

/// 9-vertex spider tree with weight 2 on the center vertex 5 and weight 1
/// elsewhere; edges (1,4),(2,4),(3,4),(4,5),(5,6),(5,7),(5,8),(5,9).
Graph fixture_weighted_spider();

/// Uniform random labeled tree on n vertices (Pruefer decode), n >= 1.
/// Deterministic for a fixed seed.
Graph gen_random_tree(int n, uint64_t seed);

/// Random bipartite graph on nl left + nr right vertices (left ids 1..nl).
/// Draws ceil(nl*nr*edge_prob_control/100) candidate pairs and accepts a
/// candidate while it is new and both endpoint degrees are < max_degree.
/// Deterministic for a fixed seed. edge_prob_control is clamped to [0,100].
Graph gen_random_bipartite(int nl, int nr, int max_degree, int edge_prob_control,
                           uint64_t seed);

/// Seeded RNG used by every generator: the std::mt19937_64 engine (bit-exact
/// across platforms) with plain modulo reduction, so corpora are reproducible.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    uint64_t next() { return eng_(); }
    /// Uniform-ish integer in [0, bound), bound >= 1.
    uint64_t below(uint64_t bound) { return eng_() % bound; }
    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace pvc

#endif  // PVC_GRAPH_HPP
