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

#include "qswitch/switches.h"

#include <algorithm>
#include <optional>

namespace qswitch {

CodeAssignment::CodeAssignment(const Circuit &circuit, Code initial) : codes_(circuit.size()) {
    for (const Gate &g : circuit.gates()) {
        if (!g.kind.is_identity()) {
            codes_[g.index].assign(g.arity(), initial);
        }
    }
}

Code CodeAssignment::of(const Circuit &circuit, GateIndex gate, QubitIndex qubit) const {
    const Gate &g = circuit.gate(gate);
    for (size_t k = 0; k < g.qubits.size(); k++) {
        if (g.qubits[k] == qubit && has(gate)) {
            return codes_[gate][k];
        }
    }
    throw std::invalid_argument("Gate " + std::to_string(gate) + " has no operand on qubit " + std::to_string(qubit) +
                                ".");
}

size_t CodeAssignment::count(Code code) const {
    size_t total = 0;
    for (const auto &gate : codes_) {
        total += std::count(gate.begin(), gate.end(), code);
    }
    return total;
}

CodeAssignment extract_assignment(const Circuit &circuit, const FlowNetwork &net, const Cut &cut) {
    CodeAssignment assignment(circuit, Code::A);
    for (const Gate &g : circuit.gates()) {
        if (g.kind.is_identity()) {
            continue;
        }
        for (size_t k = 0; k < g.arity(); k++) {
            NodeId v = *net.node_of(g.index, k);
            assignment.set(g.index, k, cut.in_source_side(v) ? Code::A : Code::B);
        }
    }
    return assignment;
}

namespace {

void sort_switches(std::vector<SwitchOp> &switches) {
    std::sort(switches.begin(), switches.end(), [](const SwitchOp &a, const SwitchOp &b) {
        return std::tie(a.qubit, a.after_gate) < std::tie(b.qubit, b.after_gate);
    });
}

}  // namespace

std::vector<SwitchOp> extract_switches(const Circuit &circuit, const FlowNetwork &net, const Cut &cut,
                                       const CodeAssignment &assignment) {
    std::vector<SwitchOp> switches;
    for (size_t k : cut.cut_edges) {
        const CapEdge &e = net.edges()[k];
        if (e.kind != EdgeKind::Temporal) {
            continue;
        }
        NodeRef a = net.node(e.from);
        NodeRef b = net.node(e.to);
        if (a.gate > b.gate) {
            std::swap(a, b);
        }
        SwitchOp op;
        op.qubit = a.qubit;
        op.after_gate = a.gate;
        op.before_gate = b.gate;
        op.from = assignment.of(circuit, a.gate, a.qubit);
        op.to = assignment.of(circuit, b.gate, b.qubit);
        if (op.from == op.to) {
            throw InconsistentCut("Cut temporal edge between gates " + std::to_string(a.gate) + " and " +
                                  std::to_string(b.gate) + " on qubit " + std::to_string(a.qubit) +
                                  " joins operations in the same code.");
        }
        op.spans_idle = idle_time(circuit, op.qubit, op.after_gate, op.before_gate);
        switches.push_back(op);
    }
    sort_switches(switches);
    return switches;
}

std::vector<SwitchOp> replay_switches(const Circuit &circuit, const CodeAssignment &assignment) {
    struct Last {
        bool set = false;
        GateIndex gate = 0;
        Code code = Code::A;
    };
    std::vector<Last> last(circuit.num_qubits());
    std::vector<SwitchOp> switches;
    for (const Gate &g : circuit.gates()) {
        if (g.kind.is_identity()) {
            continue;
        }
        for (size_t k = 0; k < g.arity(); k++) {
            QubitIndex q = g.qubits[k];
            Code code = assignment.at(g.index, k);
            if (last[q].set && last[q].code != code) {
                switches.push_back(SwitchOp{q, last[q].gate, g.index, last[q].code, code,
                                            idle_time(circuit, q, last[q].gate, g.index)});
            }
            last[q] = {true, g.index, code};
        }
    }
    sort_switches(switches);
    return switches;
}

std::optional<std::string> check_assignment(const Circuit &circuit, const GateSetConfig &config,
                                            const CodeAssignment &assignment, bool one_way) {
    for (const Gate &g : circuit.gates()) {
        if (g.kind.is_identity()) {
            continue;
        }
        if (!assignment.has(g.index)) {
            return "gate " + std::to_string(g.index) + " has no code";
        }
        auto membership = config.membership(g.kind);
        if (!membership.has_value()) {
            return "gate " + std::to_string(g.index) + " is not in the gate set";
        }
        for (size_t k = 0; k < g.arity(); k++) {
            Code c = assignment.at(g.index, k);
            if ((*membership == CodeMembership::CodeAOnly && c != Code::A) ||
                (*membership == CodeMembership::CodeBOnly && c != Code::B)) {
                return "gate " + std::to_string(g.index) + " runs outside its only code";
            }
        }
        if (one_way && config.is_one_way(g)) {
            const OneWayRule &rule = *config.one_way_rule();
            Code control = assignment.at(g.index, rule.control_operand);
            Code target = assignment.at(g.index, rule.target_operand);
            if (control == Code::A && target == Code::B) {
                return "one-way gate " + std::to_string(g.index) + " has control in A and target in B";
            }
        } else {
            for (size_t k = 1; k < g.arity(); k++) {
                if (assignment.at(g.index, k) != assignment.at(g.index, 0)) {
                    return "operands of gate " + std::to_string(g.index) + " are in different codes";
                }
            }
        }
    }
    return std::nullopt;
}

size_t schedule_with_switches(const CompiledCircuit &compiled, const ScheduleParams &params) {
    if (params.d_switch < 1) {
        throw std::invalid_argument("Switch duration must be at least one time step.");
    }
    const Circuit &circuit = compiled.circuit;
    size_t n = circuit.num_qubits();
    std::vector<std::vector<GateIndex>> switch_before(n);
    for (const SwitchOp &op : compiled.switches) {
        switch_before[op.qubit].push_back(op.before_gate);
    }
    for (auto &list : switch_before) {
        std::sort(list.begin(), list.end());
    }
    std::vector<size_t> next_switch(n, 0);
    std::vector<uint64_t> ready(n, 0);
    std::vector<uint64_t> last_op_end(n, 0);
    uint64_t depth = 0;
    for (const Gate &g : circuit.gates()) {
        uint64_t start = 0;
        for (QubitIndex q : g.qubits) {
            start = std::max(start, ready[q]);
        }
        if (!g.kind.is_identity()) {
            for (QubitIndex q : g.qubits) {
                auto &k = next_switch[q];
                if (k < switch_before[q].size() && switch_before[q][k] == g.index) {
                    start = std::max(start, last_op_end[q] + params.d_switch);
                    k++;
                }
            }
        }
        uint64_t end = start + 1;
        for (QubitIndex q : g.qubits) {
            ready[q] = end;
            if (!g.kind.is_identity()) {
                last_op_end[q] = end;
            }
        }
        depth = std::max(depth, end);
    }
    return static_cast<size_t>(depth);
}

CompileMetrics compute_metrics(const CompiledCircuit &compiled, const ScheduleParams &params) {
    CompileMetrics m;
    m.switch_count = compiled.switches.size();
    m.ops_in_code_a = compiled.assignment.count(Code::A);
    m.ops_in_code_b = compiled.assignment.count(Code::B);
    m.depth_no_switch = compiled.circuit.depth();
    m.depth_with_switch = schedule_with_switches(compiled, params);
    return m;
}

CompiledCircuit greedy_baseline(const Circuit &circuit, const GateSetConfig &config, bool one_way,
                                const ScheduleParams &params) {
    validate_against_gateset(circuit, config);
    CompiledCircuit out;
    out.circuit = circuit;
    out.assignment = CodeAssignment(circuit, Code::A);
    std::vector<std::optional<Code>> current(circuit.num_qubits());

    for (const Gate &g : circuit.gates()) {
        if (g.kind.is_identity()) {
            continue;
        }
        CodeMembership membership = *config.membership(g.kind);
        std::vector<Code> codes(g.arity(), Code::A);
        if (membership == CodeMembership::CodeAOnly || membership == CodeMembership::CodeBOnly) {
            std::fill(codes.begin(), codes.end(), membership == CodeMembership::CodeAOnly ? Code::A : Code::B);
        } else if (one_way && config.is_one_way(g)) {
            const OneWayRule &rule = *config.one_way_rule();
            auto control = current[g.qubits[rule.control_operand]];
            auto target = current[g.qubits[rule.target_operand]];
            Code c = control.value_or(target.value_or(Code::A));
            Code t = target.value_or(c);
            if (c == Code::A && t == Code::B) {
                t = Code::A;
            }
            codes[rule.control_operand] = c;
            codes[rule.target_operand] = t;
        } else {
            std::optional<Code> lead = current[g.qubits[0]];
            for (size_t k = 1; k < g.arity() && !lead.has_value(); k++) {
                lead = current[g.qubits[k]];
            }
            std::fill(codes.begin(), codes.end(), lead.value_or(Code::A));
        }
        for (size_t k = 0; k < g.arity(); k++) {
            out.assignment.set(g.index, k, codes[k]);
            current[g.qubits[k]] = codes[k];
        }
    }
    out.switches = replay_switches(circuit, out.assignment);
    out.cut_cost = Rational(static_cast<Int128>(out.switches.size()));
    out.metrics = compute_metrics(out, params);
    return out;
}

}  // namespace qswitch
