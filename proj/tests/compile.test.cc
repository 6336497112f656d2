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

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "qswitch/generator.h"
#include "test_support.h"

using namespace qswitch;

namespace {

const GateSetConfig kColor = GateSetConfig::color_codes();

}  // namespace

TEST(compile, running_example) {
    Circuit c = parse_circuit(qswitch::testing::read_data("running_example.qc"));
    SolveReport report;
    CompiledCircuit out = compile(c, kColor, {}, &report);
    ASSERT_EQ(out.metrics.switch_count, 4);
    ASSERT_EQ(report.flow_value, Rational(4));
    ASSERT_EQ(out.cut_cost, Rational(4));
    ASSERT_EQ(report.num_nodes, 2 + 21);
    ASSERT_EQ(report.temporal_edges, 17);
}

TEST(compile, counts_verified_solves) {
    size_t before = verified_solve_count();
    compile(parse_circuit("qubits 1\nh 0\nt 0"), kColor, {});
    compile(parse_circuit("qubits 1\nh 0"), kColor, {});
    ASSERT_EQ(verified_solve_count(), before + 2);
}

TEST(compile, json_schema_and_determinism) {
    Circuit c = parse_circuit("qubits 1\nh 0\nt 0");
    std::string text = to_json(compile(c, kColor, {}));
    ASSERT_EQ(text, to_json(compile(c, kColor, {})));
    ASSERT_EQ(text, R"({
  "num_switches": 1,
  "switches": [
    {
      "qubit": 0,
      "after_gate": 0,
      "before_gate": 1,
      "from": "A",
      "to": "B",
      "spans_idle": 0
    }
  ],
  "assignment": [
    {
      "gate": 0,
      "qubit": 0,
      "code": "A"
    },
    {
      "gate": 1,
      "qubit": 0,
      "code": "B"
    }
  ],
  "ops_in_code_a": 1,
  "ops_in_code_b": 1,
  "depth_no_switch": 2,
  "depth_with_switch": 4,
  "cut_cost": "1/1"
}
)");
}

TEST(compile, json_of_random_circuits_is_consistent) {
    for (uint64_t seed = 0; seed < 10; seed++) {
        Circuit c = generate_random(8, 16, GenDistribution::cnot_heavy(), seed);
        CompileOptions options;
        options.build.one_way_cnot = true;
        options.build.idle_bonus = true;
        CompiledCircuit out = compile(c, kColor, options);
        std::string text = to_json(out);
        ASSERT_EQ(text, to_json(compile(c, kColor, options)));
        auto doc = nlohmann::json::parse(text);
        ASSERT_EQ(doc["num_switches"].get<size_t>(), doc["switches"].size());
        ASSERT_EQ(doc["ops_in_code_a"].get<size_t>() + doc["ops_in_code_b"].get<size_t>(), doc["assignment"].size());
        Rational cost = Rational::parse(doc["cut_cost"].get<std::string>());
        ASSERT_EQ(static_cast<size_t>(cost.ceil()), out.switches.size());
    }
}

TEST(compile, text_output) {
    Circuit c = parse_circuit("qubits 1\nh 0\nid 0\nt 0");
    std::string text = to_text(compile(c, kColor, {}));
    ASSERT_EQ(text.rfind("switches: 1\n", 0), 0);
    ASSERT_NE(text.find("q0: A -> B between gate 0 and gate 2 (idle 1)"), std::string::npos);
}

TEST(compile, both_cut_sides_give_the_same_count) {
    for (uint64_t seed = 0; seed < 20; seed++) {
        Circuit c = generate_random(6, 12, GenDistribution::even(), seed);
        CompileOptions maximal;
        CompileOptions minimal;
        minimal.cut_side = CutSide::SourceMinimal;
        CompiledCircuit a = compile(c, kColor, maximal);
        CompiledCircuit b = compile(c, kColor, minimal);
        ASSERT_EQ(a.switches.size(), b.switches.size());
        ASSERT_GE(a.metrics.ops_in_code_a, b.metrics.ops_in_code_a);
    }
}

TEST(compile, bias_allows_more_switches_than_cost) {
    Circuit c = generate_random(8, 16, GenDistribution::even(), 4);
    CompileOptions options;
    options.build.bias = BiasOptions::from_ratio(Rational(1, 10));
    CompiledCircuit out = compile(c, kColor, options);
    ASSERT_FALSE(check_assignment(c, kColor, out.assignment, false).has_value());
    ASSERT_TRUE(Rational(static_cast<Int128>(out.switches.size())) <= out.cut_cost);
}

TEST(compile, gate_outside_the_gate_set) {
    Circuit c(1);
    c.append(GateKind("S"), {0});
    ASSERT_THROW(compile(c, kColor, {}), UnknownGateForGateSet);
}
