#ifndef PVC_LAGRANGIAN_HPP
#define PVC_LAGRANGIAN_HPP

#include <stdexcept>
#include <vector>

#include "pvc/flow.hpp"
#include "pvc/graph.hpp"
#include "pvc/oracle.hpp"

namespace pvc {

/// Raised when the solver's own certificate check fails, i.e. the greedy
/// witness cannot realize the computed optimum size. This signals that the
/// input graph does not have nonincreasing coverage marginals; the solver
/// never silently returns a set it could not validate.
struct MncViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Half-integral penalty threshold 1/lambda = j + 1/2, kept exactly as the
/// integer j. lambda = 2/(2j+1) is never materialized; all arithmetic is on
/// objectives pre-scaled by (2j+1).
struct ThresholdParam {
    int j = 0;
};

/// Optimal solution of the penalized subproblem at one threshold.
/// scaled_objective = (2j+1)*k + 2*|uncovered|, the plain objective times
/// (2j+1) so that the per-edge penalty becomes the integer 2.
struct LagrangianSolution {
    std::vector<int> selected;
    std::vector<int> uncovered_edges;  // indices into Graph::edges()
    int k = 0;
    long long scaled_objective = 0;
};

/// One threshold sample of the solution curve.
struct CurvePoint {
    int j = 0;
    int k = 0;        // selected vertex count
    int covered = 0;  // m - |uncovered|
};

/// Introspection data for the binary search inside solve_pvc_mnc.
struct MncSolveTrace {
    bool exact_hit = false;  // a threshold solution covered exactly t
    bool case2 = false;
    int j1 = 0, j2 = 0;  // adjacent thresholds, j1 = j2 + 1
    int k1 = 0, t1 = 0;  // size/coverage of the j1 solution
    int k_star = 0;
};

/// Min-cut realization of the penalized subproblem. Source feeds every Left
/// vertex with capacity 2j+1, every Right vertex feeds the sink with
/// capacity 2j+1, and each edge contributes a Left->Right arc of capacity 2.
/// Cutting a vertex arc selects that vertex; cutting an edge arc leaves the
/// edge uncovered. Node ids: 0 = source, 1..n = vertices, n+1 = sink.
FlowNetwork build_lagrangian_network(const Graph& g, const BipartiteLabeling& lab,
                                     ThresholdParam p);

/// Solves the subproblem exactly via the canonical minimum cut (residual
/// reachability): Left u is selected iff u is outside the source side,
/// Right v is selected iff v is inside it. The selected set covers the
/// maximum number of edges among all sets of its size.
LagrangianSolution solve_lagrangian(const Graph& g, const BipartiteLabeling& lab,
                                    ThresholdParam p);

/// One subproblem solve per threshold j = 0..max_degree.
std::vector<CurvePoint> selected_count_curve(const Graph& g, const BipartiteLabeling& lab);

/// Exact partial-cover solver for bipartite graphs whose coverage marginals
/// are nonincreasing: binary search over half-integral thresholds; either a
/// threshold solution covers exactly t (returned directly), or adjacent
/// thresholds bracket t and the optimum size is k1 + ceil((t-t1)/(j2+1)),
/// realized by greedily peeling the denser bracket solution. The returned
/// set always covers >= t (validated); on inputs without the concavity
/// property the peel validation may fail, raising MncViolationError.
PvcSolution solve_pvc_mnc(const PvcInstance& inst, const BipartiteLabeling& lab,
                          MncSolveTrace* trace = nullptr);

}  // namespace pvc

#endif  // PVC_LAGRANGIAN_HPP
