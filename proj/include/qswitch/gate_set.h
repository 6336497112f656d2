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

#ifndef QSWITCH_GATE_SET_H
#define QSWITCH_GATE_SET_H

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "qswitch/circuit.h"

namespace qswitch {

/// The two codes. CodeA is the source side of the network (e.g. the 2D color code), CodeB the sink
/// side (e.g. the 3D color code).
enum class Code : uint8_t {
    A = 0,
    B = 1,
};

inline Code other(Code c) {
    return c == Code::A ? Code::B : Code::A;
}
inline char code_letter(Code c) {
    return c == Code::A ? 'A' : 'B';
}

enum class CodeMembership : uint8_t {
    CodeAOnly,
    CodeBOnly,
    Both,
};

/// Mixed-code execution of a two-qubit kind: legal when the control operand is in CodeB and the
/// target operand is in CodeA.
struct OneWayRule {
    GateKind kind;
    size_t control_operand = 0;
    size_t target_operand = 1;
};

class GateSetConfig {
   public:
    GateSetConfig() = default;

    /// H in CodeA, T in CodeB, CNOT in both, with the one-way CNOT rule (control B, target A).
    static GateSetConfig color_codes();

    /// Throws if `kind` is the identity.
    void set_membership(const GateKind &kind, CodeMembership membership);
    /// Throws unless `rule.kind` is registered with membership Both and the operand roles differ.
    void set_one_way_rule(OneWayRule rule);
    void clear_one_way_rule();

    std::optional<CodeMembership> membership(const GateKind &kind) const;
    const std::optional<OneWayRule> &one_way_rule() const {
        return one_way_;
    }
    const std::map<GateKind, CodeMembership> &memberships() const {
        return membership_;
    }

    /// True when `gate` matches the one-way rule (kind and arity 2).
    bool is_one_way(const Gate &gate) const;

   private:
    std::map<GateKind, CodeMembership> membership_;
    std::optional<OneWayRule> one_way_;
};

class UnknownGateForGateSet : public std::invalid_argument {
   public:
    UnknownGateForGateSet(GateKind kind, GateIndex gate_index);

    const GateKind &kind() const {
        return kind_;
    }
    GateIndex gate_index() const {
        return gate_index_;
    }

   private:
    GateKind kind_;
    GateIndex gate_index_;
};

/// Throws UnknownGateForGateSet at the first non-identity gate whose kind has no membership.
void validate_against_gateset(const Circuit &circuit, const GateSetConfig &config);

}  // namespace qswitch

#endif
