// Copyright 2026 The qswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qswitch/maxflow.h"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "qswitch/dimacs.h"

namespace qswitch {

namespace {

/// Residual graph with every pair of antiparallel edges merged into one arc pair.
/// Arc 2p runs lo->hi and arc 2p+1 runs hi->lo for pair p.
struct ResidualGraph {
    size_t num_nodes = 0;
    Int128 scale = 1;
    std::vector<NodeId> arc_head;
    std::vector<Int128> residual;
    std::vector<Int128> pair_capacity;  // capacity of each arc before any flow
    std::vector<uint32_t> adj_begin;
    std::vector<uint32_t> adj;
    std::vector<uint32_t> edge_pair;
    std::vector<uint8_t> edge_backward;
    std::vector<Int128> edge_capacity;

    NodeId tail(uint32_t arc) const {
        return arc_head[arc ^ 1u];
    }

    explicit ResidualGraph(const FlowNetwork &net) : num_nodes(net.num_nodes()), scale(capacity_scale(net)) {
        const auto &edges = net.edges();
        std::unordered_map<uint64_t, uint32_t> pair_of;
        pair_of.reserve(edges.size());
        edge_pair.resize(edges.size());
        edge_backward.resize(edges.size());
        edge_capacity.resize(edges.size());
        const Rational scale_r(scale);
        for (size_t k = 0; k < edges.size(); k++) {
            const CapEdge &e = edges[k];
            NodeId lo = std::min(e.from, e.to);
            NodeId hi = std::max(e.from, e.to);
            uint64_t key = (static_cast<uint64_t>(lo) << 32) | hi;
            auto [it, inserted] = pair_of.try_emplace(key, static_cast<uint32_t>(arc_head.size() / 2));
            if (inserted) {
                arc_head.push_back(hi);
                arc_head.push_back(lo);
                pair_capacity.push_back(0);
                pair_capacity.push_back(0);
            }
            Rational scaled = net.effective_capacity(e) * scale_r;
            Int128 cap = scaled.num();
            uint32_t arc = 2 * it->second + (e.from == lo ? 0 : 1);
            pair_capacity[arc] = checked_add(pair_capacity[arc], cap);
            edge_pair[k] = it->second;
            edge_backward[k] = e.from == lo ? 0 : 1;
            edge_capacity[k] = cap;
        }
        residual = pair_capacity;

        adj_begin.assign(num_nodes + 1, 0);
        for (uint32_t a = 0; a < arc_head.size(); a++) {
            adj_begin[tail(a) + 1]++;
        }
        for (size_t v = 0; v < num_nodes; v++) {
            adj_begin[v + 1] += adj_begin[v];
        }
        adj.resize(arc_head.size());
        std::vector<uint32_t> fill(adj_begin.begin(), adj_begin.end() - 1);
        for (uint32_t a = 0; a < arc_head.size(); a++) {
            adj[fill[tail(a)]++] = a;
        }
    }

    /// Flow carried lo->hi by pair p (negative when it runs hi->lo).
    Int128 pair_flow(uint32_t p) const {
        return pair_capacity[2 * p] - residual[2 * p];
    }
};

class Dinic {
   public:
    explicit Dinic(ResidualGraph &graph) : g_(graph), level_(graph.num_nodes), next_(graph.num_nodes) {
    }

    Int128 run() {
        Int128 total = 0;
        while (build_levels()) {
            for (size_t v = 0; v < g_.num_nodes; v++) {
                next_[v] = g_.adj_begin[v];
            }
            total = checked_add(total, blocking_flow());
        }
        return total;
    }

   private:
    bool build_levels() {
        std::fill(level_.begin(), level_.end(), -1);
        std::deque<NodeId> queue;
        level_[kSourceNode] = 0;
        queue.push_back(kSourceNode);
        while (!queue.empty()) {
            NodeId u = queue.front();
            queue.pop_front();
            for (uint32_t k = g_.adj_begin[u]; k < g_.adj_begin[u + 1]; k++) {
                uint32_t a = g_.adj[k];
                NodeId v = g_.arc_head[a];
                if (g_.residual[a] > 0 && level_[v] < 0) {
                    level_[v] = level_[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        return level_[kSinkNode] >= 0;
    }

    Int128 blocking_flow() {
        Int128 total = 0;
        std::vector<uint32_t> path;
        NodeId u = kSourceNode;
        while (true) {
            if (u == kSinkNode) {
                Int128 bottleneck = g_.residual[path[0]];
                for (uint32_t a : path) {
                    bottleneck = std::min(bottleneck, g_.residual[a]);
                }
                size_t first_saturated = path.size();
                for (size_t k = 0; k < path.size(); k++) {
                    uint32_t a = path[k];
                    g_.residual[a] -= bottleneck;
                    g_.residual[a ^ 1u] += bottleneck;
                    if (g_.residual[a] == 0 && first_saturated == path.size()) {
                        first_saturated = k;
                    }
                }
                total = checked_add(total, bottleneck);
                path.resize(first_saturated);
                u = path.empty() ? kSourceNode : g_.arc_head[path.back()];
                continue;
            }
            bool advanced = false;
            for (; next_[u] < g_.adj_begin[u + 1]; next_[u]++) {
                uint32_t a = g_.adj[next_[u]];
                NodeId v = g_.arc_head[a];
                if (g_.residual[a] > 0 && level_[v] == level_[u] + 1) {
                    path.push_back(a);
                    u = v;
                    advanced = true;
                    break;
                }
            }
            if (advanced) {
                continue;
            }
            level_[u] = -1;
            if (path.empty()) {
                return total;
            }
            uint32_t back = path.back();
            path.pop_back();
            u = g_.tail(back);
            next_[u]++;
        }
    }

    ResidualGraph &g_;
    std::vector<int64_t> level_;
    std::vector<uint32_t> next_;
};

}  // namespace

std::vector<NodeId> Cut::source_nodes() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < source_side.size(); v++) {
        if (source_side[v]) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<NodeId> Cut::sink_nodes() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < source_side.size(); v++) {
        if (!source_side[v]) {
            out.push_back(v);
        }
    }
    return out;
}

FlowState max_flow(const FlowNetwork &net) {
    ResidualGraph graph(net);
    Dinic solver(graph);
    Int128 value = solver.run();

    FlowState state;
    state.scale = graph.scale;
    state.value = Rational(value, graph.scale);
    state.edge_flow.assign(net.edges().size(), 0);
    // Split each pair's net flow over the original edges running in its direction, in edge order.
    std::vector<Int128> remaining(graph.pair_capacity.size() / 2);
    for (uint32_t p = 0; p < remaining.size(); p++) {
        remaining[p] = graph.pair_flow(p);
    }
    for (size_t k = 0; k < net.edges().size(); k++) {
        uint32_t p = graph.edge_pair[k];
        Int128 &left = remaining[p];
        bool forward = graph.edge_backward[k] == 0;
        if ((forward && left > 0) || (!forward && left < 0)) {
            Int128 amount = std::min(forward ? left : -left, graph.edge_capacity[k]);
            state.edge_flow[k] = amount;
            left += forward ? -amount : amount;
        }
    }
    return state;
}

Cut min_cut(const FlowNetwork &net, const FlowState &flow, CutSide side) {
    if (flow.edge_flow.size() != net.edges().size()) {
        throw std::invalid_argument("Flow does not belong to this network.");
    }
    ResidualGraph graph(net);
    if (graph.scale % flow.scale != 0) {
        throw std::invalid_argument("Flow scale is incompatible with the network capacities.");
    }
    Int128 rescale = graph.scale / flow.scale;
    std::vector<Int128> pair_flow(graph.pair_capacity.size() / 2, 0);
    for (size_t k = 0; k < net.edges().size(); k++) {
        Int128 f = checked_mul(flow.edge_flow[k], rescale);
        pair_flow[graph.edge_pair[k]] += graph.edge_backward[k] ? -f : f;
    }
    for (uint32_t p = 0; p < pair_flow.size(); p++) {
        graph.residual[2 * p] = graph.pair_capacity[2 * p] - pair_flow[p];
        graph.residual[2 * p + 1] = graph.pair_capacity[2 * p + 1] + pair_flow[p];
        if (graph.residual[2 * p] < 0 || graph.residual[2 * p + 1] < 0) {
            throw std::invalid_argument("Flow exceeds an edge capacity.");
        }
    }

    Cut cut;
    std::vector<bool> marked(net.num_nodes(), false);
    std::deque<NodeId> queue;
    if (side == CutSide::SourceMinimal) {
        marked[kSourceNode] = true;
        queue.push_back(kSourceNode);
        while (!queue.empty()) {
            NodeId u = queue.front();
            queue.pop_front();
            for (uint32_t k = graph.adj_begin[u]; k < graph.adj_begin[u + 1]; k++) {
                uint32_t a = graph.adj[k];
                NodeId v = graph.arc_head[a];
                if (graph.residual[a] > 0 && !marked[v]) {
                    marked[v] = true;
                    queue.push_back(v);
                }
            }
        }
        if (marked[kSinkNode]) {
            throw std::invalid_argument("Flow is not maximal: the sink is reachable in the residual graph.");
        }
        cut.source_side = std::move(marked);
    } else {
        marked[kSinkNode] = true;
        queue.push_back(kSinkNode);
        while (!queue.empty()) {
            NodeId w = queue.front();
            queue.pop_front();
            for (uint32_t k = graph.adj_begin[w]; k < graph.adj_begin[w + 1]; k++) {
                uint32_t into = graph.adj[k] ^ 1u;
                NodeId u = graph.arc_head[graph.adj[k]];
                if (graph.residual[into] > 0 && !marked[u]) {
                    marked[u] = true;
                    queue.push_back(u);
                }
            }
        }
        if (marked[kSourceNode]) {
            throw std::invalid_argument("Flow is not maximal: the source reaches the sink in the residual graph.");
        }
        cut.source_side.resize(net.num_nodes());
        for (size_t v = 0; v < marked.size(); v++) {
            cut.source_side[v] = !marked[v];
        }
    }

    Int128 scaled_cost = 0;
    for (size_t k = 0; k < net.edges().size(); k++) {
        const CapEdge &e = net.edges()[k];
        if (cut.source_side[e.from] && !cut.source_side[e.to]) {
            cut.cut_edges.push_back(k);
            scaled_cost = checked_add(scaled_cost, graph.edge_capacity[k]);
        }
    }
    cut.cost = Rational(scaled_cost, graph.scale);
    if (cut.cost >= net.infinite_sentinel()) {
        throw UnboundedCut("Every cut severs an infinite edge (cost " + cut.cost.str() +
                           "): the code constraints are contradictory.");
    }
    return cut;
}

std::optional<std::string> check_flow(const FlowNetwork &net, const FlowState &flow) {
    if (flow.edge_flow.size() != net.edges().size()) {
        return "flow has " + std::to_string(flow.edge_flow.size()) + " entries for " +
               std::to_string(net.edges().size()) + " edges";
    }
    std::vector<Rational> balance(net.num_nodes(), Rational(0));
    for (size_t k = 0; k < net.edges().size(); k++) {
        const CapEdge &e = net.edges()[k];
        Rational f = flow.flow(k);
        if (f < Rational(0) || f > net.effective_capacity(e)) {
            return "edge " + std::to_string(k) + " carries " + f.str() + " outside [0, capacity]";
        }
        balance[e.from] -= f;
        balance[e.to] += f;
    }
    for (NodeId v = 0; v < net.num_nodes(); v++) {
        if (v != kSourceNode && v != kSinkNode && !balance[v].is_zero()) {
            return "conservation violated at node " + std::to_string(v) + " (imbalance " + balance[v].str() + ")";
        }
    }
    if (-balance[kSourceNode] != flow.value) {
        return "source outflow " + (-balance[kSourceNode]).str() + " differs from reported value " + flow.value.str();
    }
    return std::nullopt;
}

const char *cut_violation_name(CutViolationKind kind) {
    switch (kind) {
        case CutViolationKind::PartitionInvalid:
            return "PartitionInvalid";
        case CutViolationKind::CutEdgeOmitted:
            return "CutEdgeOmitted";
        case CutViolationKind::SpuriousCutEdge:
            return "SpuriousCutEdge";
        case CutViolationKind::CostMismatch:
            return "CostMismatch";
        case CutViolationKind::InfiniteEdgeCut:
            return "InfiniteEdgeCut";
        case CutViolationKind::NotSeparating:
            return "NotSeparating";
    }
    return "?";
}

std::optional<CutViolation> verify_cut(const FlowNetwork &net, const Cut &cut) {
    const auto &edges = net.edges();
    if (cut.source_side.size() != net.num_nodes()) {
        return CutViolation{CutViolationKind::PartitionInvalid, "partition does not cover every node", std::nullopt};
    }
    if (!cut.source_side[kSourceNode]) {
        return CutViolation{CutViolationKind::PartitionInvalid, "source is on the sink side", std::nullopt};
    }
    if (cut.source_side[kSinkNode]) {
        return CutViolation{CutViolationKind::PartitionInvalid, "sink is on the source side", std::nullopt};
    }

    std::vector<bool> listed(edges.size(), false);
    for (size_t k : cut.cut_edges) {
        if (k >= edges.size() || listed[k]) {
            return CutViolation{CutViolationKind::SpuriousCutEdge, "cut edge listed twice or out of range", k};
        }
        listed[k] = true;
        if (!cut.source_side[edges[k].from] || cut.source_side[edges[k].to]) {
            return CutViolation{CutViolationKind::SpuriousCutEdge,
                                "edge " + std::to_string(k) + " does not run from S to T", k};
        }
    }
    Rational total(0);
    for (size_t k = 0; k < edges.size(); k++) {
        const CapEdge &e = edges[k];
        bool crosses = cut.source_side[e.from] && !cut.source_side[e.to];
        if (crosses && !listed[k]) {
            return CutViolation{CutViolationKind::CutEdgeOmitted,
                                "edge " + std::to_string(k) + " (" + std::to_string(e.from) + "->" +
                                    std::to_string(e.to) + ") crosses the cut but is not listed",
                                k};
        }
        if (crosses) {
            if (e.capacity.infinite) {
                return CutViolation{CutViolationKind::InfiniteEdgeCut,
                                    "edge " + std::to_string(k) + " has infinite capacity", k};
            }
            total += e.capacity.value;
        }
    }
    if (total != cut.cost) {
        return CutViolation{CutViolationKind::CostMismatch,
                            "cut edges sum to " + total.str() + " but cost is " + cut.cost.str(), std::nullopt};
    }

    // Directed reachability from the source with the cut edges removed, using the raw edge list.
    std::vector<std::vector<size_t>> out(net.num_nodes());
    for (size_t k = 0; k < edges.size(); k++) {
        if (!listed[k]) {
            out[edges[k].from].push_back(k);
        }
    }
    std::vector<bool> seen(net.num_nodes(), false);
    std::vector<NodeId> stack{kSourceNode};
    seen[kSourceNode] = true;
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        for (size_t k : out[u]) {
            NodeId v = edges[k].to;
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    if (seen[kSinkNode]) {
        return CutViolation{CutViolationKind::NotSeparating, "sink still reachable after removing the cut edges",
                            std::nullopt};
    }
    return std::nullopt;
}

}  // namespace qswitch
