#ifndef PVC_FLOW_HPP
#define PVC_FLOW_HPP

#include <cstdint>
#include <vector>

namespace pvc {

/// Directed network with integer arc capacities. Node ids are 0-based and
/// local to the network (callers define their own embedding).
struct FlowNetwork {
    struct Arc {
        int from = 0;
        int to = 0;
        long long capacity = 0;
    };
    int node_count = 0;
    int source = 0;
    int sink = 0;
    std::vector<Arc> arcs;
};

/// Maximum flow value plus two extreme minimum cuts: the canonical cut
/// (nodes reachable from the source in the final residual graph) and the
/// widest cut (everything that cannot reach the sink in the residual
/// graph). They coincide when the minimum cut is unique.
struct CutResult {
    long long max_flow_value = 0;
    std::vector<uint8_t> in_source_side;      // canonical (smallest source side)
    std::vector<uint8_t> in_wide_source_side;  // widest source side

    bool source_side(int node) const { return in_source_side[node] != 0; }
    bool wide_source_side(int node) const { return in_wide_source_side[node] != 0; }
};

/// Dinic blocking-flow max-flow. After the flow is computed the result is
/// self-checked: conservation at internal nodes, capacity bounds, and
/// max-flow = capacity of the returned cut (strong duality). A violated
/// check throws std::logic_error. Disconnected source/sink yields flow 0.
CutResult max_flow_min_cut(const FlowNetwork& net);

}  // namespace pvc

#endif  // PVC_FLOW_HPP
