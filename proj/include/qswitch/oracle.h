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

#ifndef QSWITCH_ORACLE_H
#define QSWITCH_ORACLE_H

#include <stdexcept>

#include "qswitch/circuit.h"
#include "qswitch/gate_set.h"
#include "qswitch/switches.h"

namespace qswitch {

struct OracleResult {
    size_t optimum = 0;
    /// Optimal labelling that is lexicographically smallest in (gate, operand) order, with A < B.
    CodeAssignment witness;
    size_t free_choices = 0;
};

class OracleTooLarge : public std::runtime_error {
   public:
    OracleTooLarge(size_t free_choices, size_t limit);

    size_t free_choices() const {
        return free_choices_;
    }

   private:
    size_t free_choices_;
};

constexpr size_t kOracleMaxFreeChoices = 24;

/// Exhaustive minimum switch count. Operands of coupled gates share one decision variable, forced
/// gates are fixed, and with `one_way` the one-way gate's operands are separate variables with the
/// control-A/target-B combination excluded. Does not use the flow network.
OracleResult brute_force_min_switches(const Circuit &circuit, const GateSetConfig &config, bool one_way,
                                      size_t max_free_choices = kOracleMaxFreeChoices);

}  // namespace qswitch

#endif
