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

#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "qswitch/compile.h"
#include "test_support.h"

using namespace qswitch;

namespace {

const GateSetConfig kColor = GateSetConfig::color_codes();

Circuit permute_qubits(const Circuit &c, const std::vector<QubitIndex> &perm) {
    Circuit out(c.num_qubits());
    for (const Gate &g : c.gates()) {
        std::vector<QubitIndex> qubits;
        for (QubitIndex q : g.qubits) {
            qubits.push_back(perm[q]);
        }
        out.append(g.kind, qubits);
    }
    return out;
}

size_t switches_of(const Circuit &c, const CodeAssignment &assignment) {
    return replay_switches(c, assignment).size();
}

}  // namespace

TEST(oracle, forced_chain) {
    OracleResult r = brute_force_min_switches(parse_circuit("qubits 1\nh 0\nt 0\nh 0"), kColor, false);
    ASSERT_EQ(r.optimum, 2);
    ASSERT_EQ(r.free_choices, 0);
}

TEST(oracle, one_way_example) {
    Circuit c = parse_circuit(qswitch::testing::read_data("one_way.qc"));
    OracleResult both = brute_force_min_switches(c, kColor, false);
    OracleResult one = brute_force_min_switches(c, kColor, true);
    ASSERT_EQ(both.optimum, 1);
    ASSERT_EQ(one.optimum, 0);
    ASSERT_EQ(one.witness.at(2, 0), Code::B);
    ASSERT_EQ(one.witness.at(2, 1), Code::A);
}

TEST(oracle, witness_is_optimal_feasible_and_smallest) {
    Circuit c = parse_circuit("qubits 2\ncx 0 1\nh 0\nt 1");
    OracleResult r = brute_force_min_switches(c, kColor, false);
    ASSERT_EQ(r.optimum, 1);
    ASSERT_EQ(r.free_choices, 1);
    ASSERT_FALSE(check_assignment(c, kColor, r.witness, false).has_value());
    ASSERT_EQ(switches_of(c, r.witness), r.optimum);
    // A before B: the tie between the two options resolves to code A.
    ASSERT_EQ(r.witness.at(0, 0), Code::A);
}

TEST(oracle, too_large) {
    Circuit c(2);
    for (int k = 0; k < 25; k++) {
        c.append(GateKind::cnot(), {0, 1});
    }
    try {
        brute_force_min_switches(c, kColor, false);
        FAIL();
    } catch (const OracleTooLarge &e) {
        ASSERT_EQ(e.free_choices(), 25);
    }
    ASSERT_THROW(brute_force_min_switches(c, kColor, false, 10), OracleTooLarge);
}

TEST(oracle, agrees_with_min_cut) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 500; trial++) {
        Circuit c = qswitch::testing::random_small_circuit(rng, 2 + rng() % 4, rng() % 13);
        for (bool one_way : {false, true}) {
            OracleResult r = brute_force_min_switches(c, kColor, one_way);
            ASSERT_FALSE(check_assignment(c, kColor, r.witness, one_way).has_value());
            ASSERT_EQ(switches_of(c, r.witness), r.optimum);
            CompileOptions options;
            options.build.one_way_cnot = one_way;
            ASSERT_EQ(compile(c, kColor, options).metrics.switch_count, r.optimum) << c.str();
            ASSERT_LE(r.optimum, greedy_baseline(c, kColor, one_way).switches.size());
        }
    }
}

TEST(oracle, permutation_invariance) {
    std::mt19937_64 rng(78);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 2 + rng() % 4;
        Circuit c = qswitch::testing::random_small_circuit(rng, n, rng() % 13);
        std::vector<QubitIndex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (bool one_way : {false, true}) {
            ASSERT_EQ(brute_force_min_switches(c, kColor, one_way).optimum,
                      brute_force_min_switches(permute_qubits(c, perm), kColor, one_way).optimum);
        }
    }
}

TEST(oracle, one_way_is_a_relaxation) {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 200; trial++) {
        Circuit c = qswitch::testing::random_small_circuit(rng, 2 + rng() % 4, rng() % 13);
        ASSERT_LE(brute_force_min_switches(c, kColor, true).optimum, brute_force_min_switches(c, kColor, false).optimum);
    }
}
