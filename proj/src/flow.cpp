#include "pvc/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace pvc {

namespace {

/// Adjacency-list Dinic over paired residual arcs (arc i and i^1).
class Dinic {
  public:
    explicit Dinic(int n) : head_(n), level_(n), iter_(n) {}

    void add_arc(int from, int to, long long cap) {
        head_[from].push_back(static_cast<int>(to_.size()));
        to_.push_back(to);
        residual_.push_back(cap);
        head_[to].push_back(static_cast<int>(to_.size()));
        to_.push_back(from);
        residual_.push_back(0);
    }

    long long run(int source, int sink) {
        long long flow = 0;
        while (bfs(source, sink)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            while (long long pushed = dfs(source, sink, kInf)) flow += pushed;
        }
        return flow;
    }

    std::vector<uint8_t> residual_reachable(int source) const {
        std::vector<uint8_t> seen(head_.size(), 0);
        seen[source] = 1;
        std::deque<int> queue{source};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int a : head_[u])
                if (residual_[a] > 0 && !seen[to_[a]]) {
                    seen[to_[a]] = 1;
                    queue.push_back(to_[a]);
                }
        }
        return seen;
    }

    /// Nodes with a positive-residual path into `sink` (walks arcs backward:
    /// u can step to v when the arc u->v still has residual capacity).
    std::vector<uint8_t> residual_coreachable(int sink) const {
        std::vector<uint8_t> seen(head_.size(), 0);
        seen[sink] = 1;
        std::deque<int> queue{sink};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            // arc v->u with residual on the paired arc u->v means u -> v works
            for (int a : head_[v]) {
                int u = to_[a];
                if (residual_[a ^ 1] > 0 && !seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
            }
        }
        return seen;
    }

    /// Net flow pushed over the i-th added forward arc.
    long long arc_flow(int arc_index) const { return residual_[2 * arc_index + 1]; }

  private:
    static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

    bool bfs(int source, int sink) {
        std::fill(level_.begin(), level_.end(), -1);
        level_[source] = 0;
        std::deque<int> queue{source};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int a : head_[u])
                if (residual_[a] > 0 && level_[to_[a]] < 0) {
                    level_[to_[a]] = level_[u] + 1;
                    queue.push_back(to_[a]);
                }
        }
        return level_[sink] >= 0;
    }

    long long dfs(int u, int sink, long long limit) {
        if (u == sink) return limit;
        for (size_t& i = iter_[u]; i < head_[u].size(); ++i) {
            int a = head_[u][i];
            int v = to_[a];
            if (residual_[a] <= 0 || level_[v] != level_[u] + 1) continue;
            long long pushed = dfs(v, sink, std::min(limit, residual_[a]));
            if (pushed > 0) {
                residual_[a] -= pushed;
                residual_[a ^ 1] += pushed;
                return pushed;
            }
        }
        level_[u] = -1;
        return 0;
    }

    std::vector<std::vector<int>> head_;
    std::vector<int> to_;
    std::vector<long long> residual_;
    std::vector<int> level_;
    std::vector<size_t> iter_;
};

}  // namespace

CutResult max_flow_min_cut(const FlowNetwork& net) {
    if (net.node_count < 2) throw std::invalid_argument("network needs at least two nodes");
    if (net.source == net.sink) throw std::invalid_argument("source and sink must differ");
    auto check_node = [&](int v) {
        if (v < 0 || v >= net.node_count) throw std::invalid_argument("node id out of range");
    };
    check_node(net.source);
    check_node(net.sink);

    Dinic dinic(net.node_count);
    for (const auto& arc : net.arcs) {
        check_node(arc.from);
        check_node(arc.to);
        if (arc.capacity < 0) throw std::invalid_argument("negative capacity");
        dinic.add_arc(arc.from, arc.to, arc.capacity);
    }

    CutResult result;
    result.max_flow_value = dinic.run(net.source, net.sink);
    result.in_source_side = dinic.residual_reachable(net.source);
    std::vector<uint8_t> reaches_sink = dinic.residual_coreachable(net.sink);
    result.in_wide_source_side.assign(net.node_count, 0);
    for (int v = 0; v < net.node_count; ++v)
        result.in_wide_source_side[v] = reaches_sink[v] ? 0 : 1;
    if (result.in_source_side[net.sink] || !result.in_wide_source_side[net.source])
        throw std::logic_error("sink reachable after max flow");

    // Self-check: capacity bounds, conservation, and flow = capacity of both
    // returned cuts.
    std::vector<long long> net_out(net.node_count, 0);
    long long cut_capacity = 0, wide_cut_capacity = 0;
    for (size_t i = 0; i < net.arcs.size(); ++i) {
        const auto& arc = net.arcs[i];
        long long f = dinic.arc_flow(static_cast<int>(i));
        if (f < 0 || f > arc.capacity) throw std::logic_error("arc flow out of bounds");
        net_out[arc.from] += f;
        net_out[arc.to] -= f;
        if (result.source_side(arc.from) && !result.source_side(arc.to))
            cut_capacity += arc.capacity;
        if (result.wide_source_side(arc.from) && !result.wide_source_side(arc.to))
            wide_cut_capacity += arc.capacity;
    }
    for (int v = 0; v < net.node_count; ++v) {
        if (v == net.source || v == net.sink) continue;
        if (net_out[v] != 0) throw std::logic_error("flow conservation violated");
    }
    if (net_out[net.source] != result.max_flow_value || cut_capacity != result.max_flow_value ||
        wide_cut_capacity != result.max_flow_value)
        throw std::logic_error("max-flow/min-cut duality check failed: flow " +
                               std::to_string(result.max_flow_value) + ", cuts " +
                               std::to_string(cut_capacity) + "/" +
                               std::to_string(wide_cut_capacity));
    return result;
}

}  // namespace pvc
