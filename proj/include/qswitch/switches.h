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

#ifndef QSWITCH_SWITCHES_H
#define QSWITCH_SWITCHES_H

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qswitch/circuit.h"
#include "qswitch/gate_set.h"
#include "qswitch/maxflow.h"
#include "qswitch/network.h"

namespace qswitch {

/// Code of every (gate, operand) pair. Identity gates have no entries.
class CodeAssignment {
   public:
    CodeAssignment() = default;
    /// Every non-identity operand starts in `initial`.
    CodeAssignment(const Circuit &circuit, Code initial);

    Code at(GateIndex gate, size_t operand) const {
        return codes_[gate][operand];
    }
    void set(GateIndex gate, size_t operand, Code code) {
        codes_[gate][operand] = code;
    }
    bool has(GateIndex gate) const {
        return gate < codes_.size() && !codes_[gate].empty();
    }
    /// Code of `gate`'s operand on `qubit`; throws if the gate does not act on it.
    Code of(const Circuit &circuit, GateIndex gate, QubitIndex qubit) const;

    /// Code reported for qubits that carry no gate at all.
    Code default_code() const {
        return Code::A;
    }

    size_t count(Code code) const;

    bool operator==(const CodeAssignment &) const = default;

   private:
    std::vector<std::vector<Code>> codes_;
};

struct SwitchOp {
    QubitIndex qubit = 0;
    GateIndex after_gate = 0;
    GateIndex before_gate = 0;
    Code from = Code::A;
    Code to = Code::B;
    uint32_t spans_idle = 0;

    bool operator==(const SwitchOp &) const = default;
};

struct ScheduleParams {
    uint32_t d_switch = 2;
};

struct CompileMetrics {
    size_t switch_count = 0;
    size_t ops_in_code_a = 0;
    size_t ops_in_code_b = 0;
    size_t depth_no_switch = 0;
    size_t depth_with_switch = 0;
};

struct CompiledCircuit {
    Circuit circuit;
    CodeAssignment assignment;
    std::vector<SwitchOp> switches;
    CompileMetrics metrics;
    /// Cost of the cut that produced the plan (switch count for the greedy baseline).
    Rational cut_cost;
};

class InconsistentCut : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Source-side nodes run in CodeA, sink-side nodes in CodeB.
CodeAssignment extract_assignment(const Circuit &circuit, const FlowNetwork &net, const Cut &cut);

/// One switch per cut temporal edge, sorted by (qubit, after_gate).
std::vector<SwitchOp> extract_switches(const Circuit &circuit, const FlowNetwork &net, const Cut &cut,
                                       const CodeAssignment &assignment);

/// Switches implied by walking each qubit's gates in order and comparing neighbouring codes.
std::vector<SwitchOp> replay_switches(const Circuit &circuit, const CodeAssignment &assignment);

/// Returns a description of the first gate-set or coupling constraint that `assignment` breaks.
std::optional<std::string> check_assignment(const Circuit &circuit, const GateSetConfig &config,
                                            const CodeAssignment &assignment, bool one_way);

/// Makespan of an ASAP schedule in which every switch holds its qubit for `d_switch` steps, starting
/// when `after_gate` finishes. Identity gates mark idle steps, so a switch overlaps them.
size_t schedule_with_switches(const CompiledCircuit &compiled, const ScheduleParams &params);

/// Left-to-right heuristic: each qubit stays in its current code until a gate forces a change.
/// Mixed operands of a flexible gate follow the control (operand 0), unless `one_way` allows the
/// mixed configuration as is.
CompiledCircuit greedy_baseline(const Circuit &circuit, const GateSetConfig &config, bool one_way = false,
                                const ScheduleParams &params = {});

/// Fills switch_count, per-code op counts and both depths from the plan.
CompileMetrics compute_metrics(const CompiledCircuit &compiled, const ScheduleParams &params);

}  // namespace qswitch

#endif
