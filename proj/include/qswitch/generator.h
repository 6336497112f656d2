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

#ifndef QSWITCH_GENERATOR_H
#define QSWITCH_GENERATOR_H

#include <cstdint>
#include <string>
#include <string_view>

#include "qswitch/circuit.h"

namespace qswitch {

/// Per-qubit, per-step sampling probabilities for random {H, T, CNOT, ID} circuits.
struct GenDistribution {
    std::string name;
    double p_h = 0;
    double p_t = 0;
    double p_cnot = 0;
    double p_id = 0;

    /// 15% each of H, T and CNOT.
    static GenDistribution even();
    /// 10% H, 10% T, 30% CNOT.
    static GenDistribution cnot_heavy();
    /// "even" or "cnot-heavy"; throws std::invalid_argument otherwise.
    static GenDistribution by_name(std::string_view name);

    /// Throws std::invalid_argument unless all probabilities are in [0,1] and sum to 1 within 1e-9.
    void validate() const;
};

/// Layered random circuit: `steps` rounds, in each of which every qubit receives exactly one gate
/// (identity gates are materialized). Within a round, free qubits are visited in ascending order and
/// draw a kind from `dist`; a kind equal to the qubit's gate in the previous round is redrawn unless
/// it is the identity. A CNOT takes a uniformly random free partner whose previous gate was not a
/// CNOT, with a fair coin deciding which of the two is the control; without a partner the qubit idles.
///
/// The output depends only on the arguments: the sampler uses mt19937_64 with integer-only
/// mappings, so it is reproducible across platforms.
Circuit generate_random(size_t num_qubits, size_t steps, const GenDistribution &dist, uint64_t seed);

}  // namespace qswitch

#endif
