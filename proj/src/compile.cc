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

#include "qswitch/compile.h"

#include <atomic>
#include <sstream>

#include "json.hpp"

namespace qswitch {

namespace {

std::atomic<size_t> verified_solves{0};

std::string code_name(Code c) {
    return std::string(1, code_letter(c));
}

}  // namespace

size_t verified_solve_count() {
    return verified_solves.load();
}

CompiledCircuit compile(const Circuit &circuit, const GateSetConfig &config, const CompileOptions &options,
                        SolveReport *report) {
    FlowNetwork net = build_network(circuit, config, options.build);
    FlowState flow = max_flow(net);
    if (auto problem = check_flow(net, flow)) {
        throw VerificationError("max-flow result is not a feasible flow: " + *problem);
    }
    Cut cut = min_cut(net, flow, options.cut_side);
    if (cut.cost != flow.value) {
        throw VerificationError("duality violated: cut cost " + cut.cost.str() + " != flow value " + flow.value.str());
    }
    if (auto violation = verify_cut(net, cut)) {
        throw VerificationError(std::string("cut certificate failed (") + cut_violation_name(violation->kind) +
                                "): " + violation->message);
    }
    verified_solves++;

    CompiledCircuit out;
    out.circuit = circuit;
    out.assignment = extract_assignment(circuit, net, cut);
    out.switches = extract_switches(circuit, net, cut, out.assignment);
    out.cut_cost = cut.cost;

    bool one_way = options.build.one_way_cnot && config.one_way_rule().has_value();
    if (auto problem = check_assignment(circuit, config, out.assignment, one_way)) {
        throw VerificationError("extracted assignment is infeasible: " + *problem);
    }
    if (replay_switches(circuit, out.assignment) != out.switches) {
        throw VerificationError("switch list disagrees with the replayed assignment");
    }
    if (!options.build.bias.has_value() && cut.cost.ceil() != static_cast<Int128>(out.switches.size())) {
        throw VerificationError("switch count " + std::to_string(out.switches.size()) +
                                " does not match cut cost " + cut.cost.str());
    }
    out.metrics = compute_metrics(out, ScheduleParams{options.build.d_switch});

    if (report != nullptr) {
        report->num_nodes = net.num_nodes();
        report->num_edges = net.edges().size();
        report->temporal_edges = net.temporal_edge_count();
        report->flow_value = flow.value;
    }
    return out;
}

std::string to_json(const CompiledCircuit &compiled) {
    nlohmann::ordered_json doc;
    doc["num_switches"] = compiled.metrics.switch_count;
    auto switches = nlohmann::ordered_json::array();
    for (const SwitchOp &op : compiled.switches) {
        nlohmann::ordered_json s;
        s["qubit"] = op.qubit;
        s["after_gate"] = op.after_gate;
        s["before_gate"] = op.before_gate;
        s["from"] = code_name(op.from);
        s["to"] = code_name(op.to);
        s["spans_idle"] = op.spans_idle;
        switches.push_back(std::move(s));
    }
    doc["switches"] = std::move(switches);
    auto assignment = nlohmann::ordered_json::array();
    for (const Gate &g : compiled.circuit.gates()) {
        if (g.kind.is_identity()) {
            continue;
        }
        for (size_t k = 0; k < g.arity(); k++) {
            nlohmann::ordered_json a;
            a["gate"] = g.index;
            a["qubit"] = g.qubits[k];
            a["code"] = code_name(compiled.assignment.at(g.index, k));
            assignment.push_back(std::move(a));
        }
    }
    doc["assignment"] = std::move(assignment);
    doc["ops_in_code_a"] = compiled.metrics.ops_in_code_a;
    doc["ops_in_code_b"] = compiled.metrics.ops_in_code_b;
    doc["depth_no_switch"] = compiled.metrics.depth_no_switch;
    doc["depth_with_switch"] = compiled.metrics.depth_with_switch;
    doc["cut_cost"] = compiled.cut_cost.str();
    return doc.dump(2) + "\n";
}

std::string to_text(const CompiledCircuit &compiled) {
    std::ostringstream out;
    const CompileMetrics &m = compiled.metrics;
    out << "switches: " << m.switch_count << "\n";
    out << "ops in code A: " << m.ops_in_code_a << "\n";
    out << "ops in code B: " << m.ops_in_code_b << "\n";
    out << "depth without switches: " << m.depth_no_switch << "\n";
    out << "depth with switches: " << m.depth_with_switch << "\n";
    out << "cut cost: " << compiled.cut_cost << "\n";
    for (const SwitchOp &op : compiled.switches) {
        out << "  q" << op.qubit << ": " << code_letter(op.from) << " -> " << code_letter(op.to) << " between gate "
            << op.after_gate << " and gate " << op.before_gate;
        if (op.spans_idle > 0) {
            out << " (idle " << op.spans_idle << ")";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qswitch
