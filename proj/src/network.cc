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

#include "qswitch/network.h"

#include <sstream>
#include <stdexcept>

namespace qswitch {

const char *edge_kind_name(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Temporal:
            return "temporal";
        case EdgeKind::GateCoupling:
            return "coupling";
        case EdgeKind::Terminal:
            return "terminal";
        case EdgeKind::Bias:
            return "bias";
    }
    return "?";
}

BiasOptions BiasOptions::from_ratio(Rational ratio) {
    return {ratio * Rational(2), ratio};
}

void BuildOptions::validate() const {
    if (d_switch < 1) {
        throw std::invalid_argument("Switch duration must be at least one time step.");
    }
    if (bias.has_value()) {
        const Rational zero(0), one(1);
        if (!(zero < bias->b_sink && bias->b_sink < bias->b_source && bias->b_source < one)) {
            throw std::invalid_argument("Bias capacities must satisfy 0 < b_sink < b_source < 1 (got b_source=" +
                                        bias->b_source.str() + ", b_sink=" + bias->b_sink.str() + ").");
        }
    }
}

std::string BuildOptions::fingerprint() const {
    std::ostringstream out;
    out << "one_way=" << (one_way_cnot ? 1 : 0) << ";idle_bonus=" << (idle_bonus ? 1 : 0) << ";bias=";
    if (bias.has_value()) {
        out << bias->b_source << ":" << bias->b_sink;
    } else {
        out << "none";
    }
    out << ";d_switch=" << d_switch;
    return out.str();
}

FlowNetwork::FlowNetwork(std::vector<NodeRef> nodes, std::vector<CapEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    if (nodes_.size() < 2 || nodes_[kSourceNode].kind != NodeKind::Source || nodes_[kSinkNode].kind != NodeKind::Sink) {
        throw std::invalid_argument("A flow network starts with the source node followed by the sink node.");
    }
    for (const CapEdge &e : edges_) {
        if (e.from >= nodes_.size() || e.to >= nodes_.size()) {
            throw std::invalid_argument("Edge endpoint out of range.");
        }
        if (e.from == e.to) {
            throw std::invalid_argument("Self-loop in flow network.");
        }
        if (!e.capacity.infinite && e.capacity.value < Rational(0)) {
            throw std::invalid_argument("Negative edge capacity.");
        }
        if (e.kind == EdgeKind::Temporal && e.from < e.to) {
            temporal_edge_count_++;
        }
    }
    finalize();
}

void FlowNetwork::finalize() {
    Rational total(0);
    for (const CapEdge &e : edges_) {
        if (!e.capacity.infinite) {
            total += e.capacity.value;
        }
    }
    infinite_sentinel_ = total + Rational(1);
}

std::optional<NodeId> FlowNetwork::node_of(GateIndex gate, size_t operand) const {
    if (gate >= gate_first_node_.size() || gate_first_node_[gate] == kNoNode) {
        return std::nullopt;
    }
    return gate_first_node_[gate] + static_cast<NodeId>(operand);
}

std::optional<NodeId> FlowNetwork::node_at(const Circuit &circuit, GateIndex gate, QubitIndex qubit) const {
    const Gate &g = circuit.gate(gate);
    for (size_t k = 0; k < g.qubits.size(); k++) {
        if (g.qubits[k] == qubit) {
            return node_of(gate, k);
        }
    }
    return std::nullopt;
}

Rational temporal_capacity(uint64_t t_idle, uint64_t n_temp) {
    if (n_temp == 0) {
        throw std::invalid_argument("temporal_capacity needs at least one temporal edge.");
    }
    Int128 t = static_cast<Int128>(t_idle);
    Int128 n = static_cast<Int128>(n_temp);
    return Rational(1) - Rational(t, checked_mul(n, t + 1));
}

uint32_t idle_time(const Circuit &circuit, QubitIndex qubit, GateIndex gate_a, GateIndex gate_b) {
    const Gate &a = circuit.gate(gate_a);
    const Gate &b = circuit.gate(gate_b);
    auto touches = [qubit](const Gate &g) {
        for (QubitIndex q : g.qubits) {
            if (q == qubit) {
                return true;
            }
        }
        return false;
    };
    if (!touches(a) || !touches(b) || a.time_step >= b.time_step) {
        throw std::invalid_argument("idle_time expects two gates on the qubit in increasing time order.");
    }
    return b.time_step - a.time_step - 1;
}

FlowNetwork build_network(const Circuit &circuit, const GateSetConfig &config, const BuildOptions &opts) {
    opts.validate();
    validate_against_gateset(circuit, config);

    FlowNetwork net;
    net.nodes_ = {NodeRef::source(), NodeRef::sink()};
    net.gate_first_node_.assign(circuit.size(), kNoNode);
    size_t temporal_pairs = 0;
    {
        std::vector<bool> seen(circuit.num_qubits(), false);
        for (const Gate &g : circuit.gates()) {
            if (g.kind.is_identity()) {
                continue;
            }
            net.gate_first_node_[g.index] = static_cast<NodeId>(net.nodes_.size());
            for (QubitIndex q : g.qubits) {
                net.nodes_.push_back(NodeRef::gate_qubit(g.index, q));
                if (seen[q]) {
                    temporal_pairs++;
                }
                seen[q] = true;
            }
        }
    }
    net.temporal_edge_count_ = temporal_pairs;

    auto &edges = net.edges_;
    auto add = [&edges](NodeId from, NodeId to, Capacity cap, EdgeKind kind) {
        edges.push_back(CapEdge{from, to, cap, kind});
    };
    const Capacity inf = Capacity::unbounded();

    std::vector<NodeId> last_node(circuit.num_qubits(), kNoNode);
    std::vector<GateIndex> last_gate(circuit.num_qubits(), 0);
    for (const Gate &g : circuit.gates()) {
        if (g.kind.is_identity()) {
            continue;
        }
        CodeMembership membership = *config.membership(g.kind);
        NodeId first = net.gate_first_node_[g.index];
        auto arity = static_cast<NodeId>(g.arity());

        for (NodeId k = 0; k < arity; k++) {
            NodeId v = first + k;
            if (membership == CodeMembership::CodeAOnly) {
                add(kSourceNode, v, inf, EdgeKind::Terminal);
                add(v, kSourceNode, inf, EdgeKind::Terminal);
            } else if (membership == CodeMembership::CodeBOnly) {
                add(v, kSinkNode, inf, EdgeKind::Terminal);
                add(kSinkNode, v, inf, EdgeKind::Terminal);
            }
        }

        if (arity >= 2) {
            if (opts.one_way_cnot && config.is_one_way(g)) {
                const OneWayRule &rule = *config.one_way_rule();
                add(first + static_cast<NodeId>(rule.control_operand), first + static_cast<NodeId>(rule.target_operand),
                    inf, EdgeKind::GateCoupling);
            } else {
                for (NodeId a = 0; a < arity; a++) {
                    for (NodeId b = a + 1; b < arity; b++) {
                        add(first + a, first + b, inf, EdgeKind::GateCoupling);
                        add(first + b, first + a, inf, EdgeKind::GateCoupling);
                    }
                }
            }
        }

        for (NodeId k = 0; k < arity; k++) {
            QubitIndex q = g.qubits[k];
            NodeId v = first + k;
            if (last_node[q] != kNoNode) {
                Rational cap(1);
                if (opts.idle_bonus) {
                    cap = temporal_capacity(idle_time(circuit, q, last_gate[q], g.index), temporal_pairs);
                }
                add(last_node[q], v, Capacity::finite(cap), EdgeKind::Temporal);
                add(v, last_node[q], Capacity::finite(cap), EdgeKind::Temporal);
            }
            last_node[q] = v;
            last_gate[q] = g.index;
        }

        if (membership == CodeMembership::Both && opts.bias.has_value()) {
            for (NodeId k = 0; k < arity; k++) {
                add(kSourceNode, first + k, Capacity::finite(opts.bias->b_source), EdgeKind::Bias);
                add(first + k, kSinkNode, Capacity::finite(opts.bias->b_sink), EdgeKind::Bias);
            }
        }
    }
    net.finalize();
    return net;
}

}  // namespace qswitch
