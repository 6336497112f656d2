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

#ifndef QSWITCH_COMPILE_H
#define QSWITCH_COMPILE_H

#include <stdexcept>
#include <string>

#include "qswitch/circuit.h"
#include "qswitch/gate_set.h"
#include "qswitch/maxflow.h"
#include "qswitch/network.h"
#include "qswitch/switches.h"

namespace qswitch {

struct CompileOptions {
    BuildOptions build;
    CutSide cut_side = CutSide::SourceMaximal;
};

/// Raised when a solver certificate fails (flow feasibility, duality, cut verification or
/// plan consistency). Indicates a bug, never bad input.
class VerificationError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

struct SolveReport {
    size_t num_nodes = 0;
    size_t num_edges = 0;
    size_t temporal_edges = 0;
    Rational flow_value;
};

/// Minimal switching plan for `circuit`: build the network, solve max-flow, take the min cut and read
/// off codes and switches. Every certificate is checked on the way; failures raise VerificationError.
CompiledCircuit compile(const Circuit &circuit, const GateSetConfig &config, const CompileOptions &options,
                        SolveReport *report = nullptr);

/// Number of solver runs in this process whose duality and cut certificates were checked and held.
size_t verified_solve_count();

/// Result document with stable field order (see README for the schema).
std::string to_json(const CompiledCircuit &compiled);
/// Short human-readable summary.
std::string to_text(const CompiledCircuit &compiled);

}  // namespace qswitch

#endif
