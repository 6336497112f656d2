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

#ifndef QSWITCH_NETWORK_H
#define QSWITCH_NETWORK_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qswitch/circuit.h"
#include "qswitch/gate_set.h"
#include "qswitch/rational.h"

namespace qswitch {

using NodeId = uint32_t;
constexpr NodeId kSourceNode = 0;
constexpr NodeId kSinkNode = 1;

enum class NodeKind : uint8_t {
    Source,
    Sink,
    GateQubit,
};

struct NodeRef {
    NodeKind kind = NodeKind::GateQubit;
    GateIndex gate = 0;
    QubitIndex qubit = 0;

    static NodeRef source() {
        return {NodeKind::Source, 0, 0};
    }
    static NodeRef sink() {
        return {NodeKind::Sink, 0, 0};
    }
    static NodeRef gate_qubit(GateIndex gate, QubitIndex qubit) {
        return {NodeKind::GateQubit, gate, qubit};
    }
    bool operator==(const NodeRef &) const = default;
};

enum class EdgeKind : uint8_t {
    Temporal,
    GateCoupling,
    Terminal,
    Bias,
};

const char *edge_kind_name(EdgeKind kind);

/// Either a finite exact capacity or the infinite marker.
struct Capacity {
    Rational value;
    bool infinite = false;

    static Capacity finite(Rational value) {
        return {value, false};
    }
    static Capacity unbounded() {
        return {Rational(0), true};
    }
    bool operator==(const Capacity &) const = default;
};

struct CapEdge {
    NodeId from = 0;
    NodeId to = 0;
    Capacity capacity;
    EdgeKind kind = EdgeKind::Temporal;

    bool operator==(const CapEdge &) const = default;
};

/// Code-preference edges: every flexible node gets Source->node (b_source) and node->Sink (b_sink).
struct BiasOptions {
    Rational b_source;
    Rational b_sink;

    /// b_sink = ratio, b_source = 2 * ratio.
    static BiasOptions from_ratio(Rational ratio);
    bool operator==(const BiasOptions &) const = default;
};

struct BuildOptions {
    bool one_way_cnot = false;
    bool idle_bonus = false;
    std::optional<BiasOptions> bias;
    /// Switch duration in time steps; consumed by the scheduler.
    uint32_t d_switch = 2;

    /// Throws std::invalid_argument unless 0 < b_sink < b_source < 1 and d_switch >= 1.
    void validate() const;
    /// Stable text describing the option set, e.g. "one_way=1;idle_bonus=0;bias=none;d_switch=2".
    std::string fingerprint() const;
};

/// Capacitated directed network with Source (CodeA) and Sink (CodeB).
///
/// Node 0 is the source, node 1 the sink. Infinite edges are priced at `infinite_sentinel()`, which
/// exceeds the total of all finite capacities, so no minimum cut ever needs one.
class FlowNetwork {
   public:
    FlowNetwork() = default;
    /// Generic network; `nodes[0]` must be the source and `nodes[1]` the sink.
    FlowNetwork(std::vector<NodeRef> nodes, std::vector<CapEdge> edges);

    size_t num_nodes() const {
        return nodes_.size();
    }
    const std::vector<NodeRef> &nodes() const {
        return nodes_;
    }
    const std::vector<CapEdge> &edges() const {
        return edges_;
    }
    const NodeRef &node(NodeId id) const {
        return nodes_[id];
    }

    /// Node of `gate`'s `operand`-th qubit, if the gate has nodes.
    std::optional<NodeId> node_of(GateIndex gate, size_t operand) const;
    /// Node of `gate` acting on `qubit`, if any.
    std::optional<NodeId> node_at(const Circuit &circuit, GateIndex gate, QubitIndex qubit) const;

    /// Number of undirected temporal edges (each realized as two directed edges).
    size_t temporal_edge_count() const {
        return temporal_edge_count_;
    }
    const Rational &infinite_sentinel() const {
        return infinite_sentinel_;
    }
    /// Capacity of an edge with infinite edges priced at the sentinel.
    Rational effective_capacity(const CapEdge &edge) const {
        return edge.capacity.infinite ? infinite_sentinel_ : edge.capacity.value;
    }

   private:
    friend FlowNetwork build_network(const Circuit &, const GateSetConfig &, const BuildOptions &);
    void finalize();

    std::vector<NodeRef> nodes_;
    std::vector<CapEdge> edges_;
    std::vector<NodeId> gate_first_node_;
    size_t temporal_edge_count_ = 0;
    Rational infinite_sentinel_ = Rational(1);
};

constexpr NodeId kNoNode = UINT32_MAX;

/// Builds the switching network of `circuit`.
///
/// Every (non-identity gate, operand) pair becomes a node. Consecutive nodes on a qubit are linked in
/// both directions by temporal edges. Gates exclusive to one code are tied to that terminal with
/// infinite edges, and the operands of a multi-qubit gate are tied together with infinite edges
/// (a single control->target edge for a one-way CNOT when `opts.one_way_cnot` is set).
FlowNetwork build_network(const Circuit &circuit, const GateSetConfig &config, const BuildOptions &opts);

/// 1 - t_idle / (n_temp * (t_idle + 1)).
Rational temporal_capacity(uint64_t t_idle, uint64_t n_temp);

/// Idle steps of `qubit` between gates `gate_a` and `gate_b` (consecutive on that qubit).
uint32_t idle_time(const Circuit &circuit, QubitIndex qubit, GateIndex gate_a, GateIndex gate_b);

}  // namespace qswitch

#endif
