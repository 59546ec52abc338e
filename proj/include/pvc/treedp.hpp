#ifndef PVC_TREEDP_HPP
#define PVC_TREEDP_HPP

#include <vector>

#include "pvc/graph.hpp"
#include "pvc/oracle.hpp"

namespace pvc {

/// Rooted view of a tree (or of one forest component).
struct RootedTree {
    int root = 0;
    std::vector<int> parent;                 // parent[root] = 0, index 0 unused
    std::vector<std::vector<int>> children;  // ascending ids
    std::vector<int> preorder;               // root first
};

/// Roots the tree at `root` (BFS ordering). Requires a connected acyclic graph.
RootedTree root_tree(const Graph& g, int root);

/// Exact best-coverage-per-size profile opt[0..n] for an acyclic graph,
/// via per-node dynamic programming over (selected-count, own-state) with a
/// knapsack merge across children; disconnected components are merged the
/// same way. Polynomial time, so it scales far beyond the enumeration
/// oracle. Requires unit weights.
CoverageProfile tree_profile(const Graph& g);

/// Exact partial-cover solver for acyclic graphs: size = min{k : opt[k] >= t}
/// with a witness reconstructed by deterministic DP backtracking (prefer
/// not-selected on ties, then the smaller child).
PvcSolution solve_pvc_tree(const PvcInstance& inst);

}  // namespace pvc

#endif  // PVC_TREEDP_HPP
