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

#include "qswitch/generator.h"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qswitch {

namespace {

enum Slot : uint8_t { kH = 0, kT = 1, kCnot = 2, kId = 3 };

class Sampler {
   public:
    explicit Sampler(uint64_t seed) : rng_(seed) {
    }

    /// Uniform double in [0, 1) built from the top 53 bits.
    double uniform01() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound).
    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do {
            x = rng_();
        } while (x >= limit);
        return x % bound;
    }

    /// Draws from `weights`, never returning `excluded` (pass kId for no exclusion).
    /// Returns kId if the remaining mass is zero.
    Slot draw(const std::array<double, 4> &weights, Slot excluded) {
        std::array<double, 4> w = weights;
        if (excluded != kId) {
            w[excluded] = 0;
        }
        double total = w[0] + w[1] + w[2] + w[3];
        if (total <= 0) {
            return kId;
        }
        double u = uniform01() * total;
        double acc = 0;
        for (int k = 0; k < 4; k++) {
            acc += w[k];
            if (u < acc && w[k] > 0) {
                return static_cast<Slot>(k);
            }
        }
        for (int k = 3; k >= 0; k--) {
            if (w[k] > 0) {
                return static_cast<Slot>(k);
            }
        }
        return kId;
    }

   private:
    std::mt19937_64 rng_;
};

}  // namespace

GenDistribution GenDistribution::even() {
    return {"even", 0.15, 0.15, 0.15, 0.55};
}

GenDistribution GenDistribution::cnot_heavy() {
    return {"cnot-heavy", 0.10, 0.10, 0.30, 0.50};
}

GenDistribution GenDistribution::by_name(std::string_view name) {
    if (name == "even") {
        return even();
    }
    if (name == "cnot-heavy") {
        return cnot_heavy();
    }
    throw std::invalid_argument("Unknown distribution '" + std::string(name) + "' (expected even or cnot-heavy).");
}

void GenDistribution::validate() const {
    for (double p : {p_h, p_t, p_cnot, p_id}) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument("Distribution probabilities must lie in [0, 1].");
        }
    }
    if (std::abs(p_h + p_t + p_cnot + p_id - 1.0) > 1e-9) {
        throw std::invalid_argument("Distribution probabilities must sum to 1.");
    }
}

Circuit generate_random(size_t num_qubits, size_t steps, const GenDistribution &dist, uint64_t seed) {
    dist.validate();
    if (num_qubits == 0) {
        throw std::invalid_argument("Random circuits need at least one qubit.");
    }
    if (num_qubits < 2 && dist.p_cnot > 0) {
        throw std::invalid_argument("CNOT sampling needs at least two qubits.");
    }
    const std::array<double, 4> weights{dist.p_h, dist.p_t, dist.p_cnot, dist.p_id};
    Sampler sampler(seed);
    Circuit circuit(num_qubits);

    std::vector<Slot> previous(num_qubits, kId);
    std::vector<Slot> current(num_qubits, kId);
    std::vector<bool> occupied(num_qubits);
    std::vector<QubitIndex> partners;
    partners.reserve(num_qubits);

    for (size_t step = 0; step < steps; step++) {
        std::fill(occupied.begin(), occupied.end(), false);
        for (size_t q = 0; q < num_qubits; q++) {
            if (occupied[q]) {
                continue;
            }
            occupied[q] = true;
            Slot kind = sampler.draw(weights, previous[q]);
            if (kind == kCnot) {
                partners.clear();
                for (size_t r = 0; r < num_qubits; r++) {
                    if (!occupied[r] && previous[r] != kCnot) {
                        partners.push_back(static_cast<QubitIndex>(r));
                    }
                }
                if (partners.empty()) {
                    kind = kId;
                } else {
                    QubitIndex partner = partners[sampler.below(partners.size())];
                    occupied[partner] = true;
                    current[q] = kCnot;
                    current[partner] = kCnot;
                    auto self = static_cast<QubitIndex>(q);
                    if (sampler.below(2) == 0) {
                        circuit.append(GateKind::cnot(), {self, partner});
                    } else {
                        circuit.append(GateKind::cnot(), {partner, self});
                    }
                    continue;
                }
            }
            current[q] = kind;
            auto self = static_cast<QubitIndex>(q);
            switch (kind) {
                case kH:
                    circuit.append(GateKind::h(), {self});
                    break;
                case kT:
                    circuit.append(GateKind::t(), {self});
                    break;
                default:
                    circuit.append(GateKind::id(), {self});
                    break;
            }
        }
        previous.swap(current);
    }
    return circuit;
}

}  // namespace qswitch
