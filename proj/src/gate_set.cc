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

#include "qswitch/gate_set.h"

namespace qswitch {

GateSetConfig GateSetConfig::color_codes() {
    GateSetConfig config;
    config.set_membership(GateKind::h(), CodeMembership::CodeAOnly);
    config.set_membership(GateKind::t(), CodeMembership::CodeBOnly);
    config.set_membership(GateKind::cnot(), CodeMembership::Both);
    config.set_one_way_rule(OneWayRule{GateKind::cnot(), 0, 1});
    return config;
}

void GateSetConfig::set_membership(const GateKind &kind, CodeMembership membership) {
    if (kind.is_identity()) {
        throw std::invalid_argument("Identity gates are idle markers and cannot have a code membership.");
    }
    membership_[kind] = membership;
    if (one_way_.has_value() && one_way_->kind == kind && membership != CodeMembership::Both) {
        one_way_.reset();
    }
}

void GateSetConfig::set_one_way_rule(OneWayRule rule) {
    auto m = membership(rule.kind);
    if (!m.has_value() || *m != CodeMembership::Both) {
        throw std::invalid_argument("One-way rule for '" + rule.kind.name() + "' requires membership Both.");
    }
    if (rule.control_operand > 1 || rule.target_operand > 1 || rule.control_operand == rule.target_operand) {
        throw std::invalid_argument("One-way rule operand roles must be distinct positions of a 2-qubit gate.");
    }
    one_way_ = std::move(rule);
}

void GateSetConfig::clear_one_way_rule() {
    one_way_.reset();
}

std::optional<CodeMembership> GateSetConfig::membership(const GateKind &kind) const {
    auto it = membership_.find(kind);
    if (it == membership_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool GateSetConfig::is_one_way(const Gate &gate) const {
    return one_way_.has_value() && gate.kind == one_way_->kind && gate.arity() == 2;
}

UnknownGateForGateSet::UnknownGateForGateSet(GateKind kind, GateIndex gate_index)
    : std::invalid_argument("Gate " + std::to_string(gate_index) + " of kind '" + kind.name() +
                            "' is not transversal in either code."),
      kind_(std::move(kind)),
      gate_index_(gate_index) {
}

void validate_against_gateset(const Circuit &circuit, const GateSetConfig &config) {
    for (const Gate &g : circuit.gates()) {
        if (!g.kind.is_identity() && !config.membership(g.kind).has_value()) {
            throw UnknownGateForGateSet(g.kind, g.index);
        }
    }
}

}  // namespace qswitch
