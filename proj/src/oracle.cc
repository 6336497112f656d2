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

#include "qswitch/oracle.h"

#include <limits>
#include <numeric>
#include <optional>

namespace qswitch {

namespace {

class DisjointSets {
   public:
    explicit DisjointSets(size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    size_t find(size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

   private:
    std::vector<size_t> parent_;
};

}  // namespace

OracleTooLarge::OracleTooLarge(size_t free_choices, size_t limit)
    : std::runtime_error("Oracle refuses " + std::to_string(free_choices) + " free choices (limit " +
                         std::to_string(limit) + ")."),
      free_choices_(free_choices) {
}

OracleResult brute_force_min_switches(const Circuit &circuit, const GateSetConfig &config, bool one_way,
                                      size_t max_free_choices) {
    validate_against_gateset(circuit, config);
    const bool use_one_way = one_way && config.one_way_rule().has_value();

    // One variable per (gate, operand) in circuit order.
    std::vector<size_t> first_var(circuit.size(), 0);
    size_t num_vars = 0;
    for (const Gate &g : circuit.gates()) {
        first_var[g.index] = num_vars;
        if (!g.kind.is_identity()) {
            num_vars += g.arity();
        }
    }

    DisjointSets sets(num_vars);
    struct Implication {
        size_t control, target;
    };
    std::vector<Implication> one_way_pairs;
    std::vector<std::pair<size_t, size_t>> neighbours;
    std::vector<std::optional<size_t>> last_var(circuit.num_qubits());
    for (const Gate &g : circuit.gates()) {
        if (g.kind.is_identity()) {
            continue;
        }
        size_t base = first_var[g.index];
        if (use_one_way && config.is_one_way(g)) {
            const OneWayRule &rule = *config.one_way_rule();
            one_way_pairs.push_back({base + rule.control_operand, base + rule.target_operand});
        } else {
            for (size_t k = 1; k < g.arity(); k++) {
                sets.unite(base, base + k);
            }
        }
        for (size_t k = 0; k < g.arity(); k++) {
            QubitIndex q = g.qubits[k];
            if (last_var[q].has_value()) {
                neighbours.emplace_back(*last_var[q], base + k);
            }
            last_var[q] = base + k;
        }
    }

    // Fix forced groups.
    std::vector<std::optional<Code>> forced(num_vars);
    for (const Gate &g : circuit.gates()) {
        if (g.kind.is_identity()) {
            continue;
        }
        CodeMembership m = *config.membership(g.kind);
        if (m == CodeMembership::Both) {
            continue;
        }
        Code code = m == CodeMembership::CodeAOnly ? Code::A : Code::B;
        for (size_t k = 0; k < g.arity(); k++) {
            size_t root = sets.find(first_var[g.index] + k);
            if (forced[root].has_value() && *forced[root] != code) {
                throw std::invalid_argument("No feasible code labelling: a coupled gate group is forced into both codes.");
            }
            forced[root] = code;
        }
    }

    // Free groups in order of their smallest member, which is the root.
    std::vector<size_t> group_bit(num_vars, SIZE_MAX);
    std::vector<size_t> free_roots;
    for (size_t v = 0; v < num_vars; v++) {
        if (sets.find(v) == v && !forced[v].has_value()) {
            group_bit[v] = free_roots.size();
            free_roots.push_back(v);
        }
    }
    const size_t free_count = free_roots.size();
    if (free_count > max_free_choices) {
        throw OracleTooLarge(free_count, max_free_choices);
    }

    std::vector<size_t> root_of(num_vars);
    for (size_t v = 0; v < num_vars; v++) {
        root_of[v] = sets.find(v);
    }
    std::vector<uint8_t> label(num_vars, 0);
    for (size_t v = 0; v < num_vars; v++) {
        if (forced[v].has_value()) {
            label[v] = *forced[v] == Code::B ? 1 : 0;
        }
    }

    size_t best = std::numeric_limits<size_t>::max();
    uint64_t best_mask = 0;
    const uint64_t total = uint64_t{1} << free_count;
    for (uint64_t mask = 0; mask < total; mask++) {
        // Group with the smallest member takes the most significant bit, so ascending masks visit
        // labellings in lexicographic order.
        for (size_t k = 0; k < free_roots.size(); k++) {
            label[free_roots[k]] = static_cast<uint8_t>((mask >> (free_count - 1 - k)) & 1);
        }
        bool feasible = true;
        for (const Implication &imp : one_way_pairs) {
            if (label[root_of[imp.control]] == 0 && label[root_of[imp.target]] == 1) {
                feasible = false;
                break;
            }
        }
        if (!feasible) {
            continue;
        }
        size_t cost = 0;
        for (auto [a, b] : neighbours) {
            cost += label[root_of[a]] != label[root_of[b]];
        }
        if (cost < best) {
            best = cost;
            best_mask = mask;
        }
    }
    if (best == std::numeric_limits<size_t>::max()) {
        throw std::invalid_argument("No feasible code labelling exists.");
    }

    OracleResult result;
    result.optimum = best;
    result.free_choices = free_count;
    result.witness = CodeAssignment(circuit, Code::A);
    for (const Gate &g : circuit.gates()) {
        if (g.kind.is_identity()) {
            continue;
        }
        for (size_t k = 0; k < g.arity(); k++) {
            size_t root = root_of[first_var[g.index] + k];
            Code code;
            if (forced[root].has_value()) {
                code = *forced[root];
            } else {
                code = ((best_mask >> (free_count - 1 - group_bit[root])) & 1) ? Code::B : Code::A;
            }
            result.witness.set(g.index, k, code);
        }
    }
    return result;
}

}  // namespace qswitch
