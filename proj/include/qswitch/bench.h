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

#ifndef QSWITCH_BENCH_H
#define QSWITCH_BENCH_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qswitch/compile.h"
#include "qswitch/generator.h"

namespace qswitch {

struct BenchConfig {
    std::vector<size_t> sizes;
    size_t reps = 1;
    /// Time steps per circuit; defaults to twice the qubit count.
    std::optional<size_t> steps;
    GenDistribution dist = GenDistribution::even();
    uint64_t base_seed = 0;
    CompileOptions options;
    GateSetConfig gate_set = GateSetConfig::color_codes();
    size_t jobs = 1;
};

struct BenchRecord {
    size_t n = 0;
    size_t steps = 0;
    std::string dist;
    uint64_t seed = 0;
    size_t num_switches = 0;
    size_t ops_in_code_a = 0;
    size_t ops_in_code_b = 0;
    size_t depth_no_switch = 0;
    size_t depth_with_switch = 0;
    /// Wall time of network build, solve and extraction. The only nondeterministic field.
    double time_ms = 0;
    std::string fingerprint;
};

/// Replicate r of size n uses seed base_seed + r. Records come back ordered by (size, replicate)
/// however many worker threads run.
std::vector<BenchRecord> run_bench(const BenchConfig &config);

void write_bench_csv(std::ostream &out, const std::vector<BenchRecord> &records);
/// Mean and standard deviation of switches, depths and time per size.
void write_bench_summary(std::ostream &out, const std::vector<BenchRecord> &records);

struct BiasSweepRecord {
    std::string circuit;
    Rational ratio;
    Rational b_source;
    Rational b_sink;
    size_t base_switches = 0;
    size_t switches = 0;
    int64_t extra_switches = 0;
    size_t base_code_a_nodes = 0;
    size_t code_a_nodes = 0;
    int64_t extra_code_a_nodes = 0;
    /// Nodes whose gate may run in either code.
    size_t flexible_nodes = 0;
};

/// Compiles once without bias and once per ratio with b_sink = r, b_source = 2r.
std::vector<BiasSweepRecord> bias_sweep(const Circuit &circuit, const GateSetConfig &config,
                                        const CompileOptions &base, std::span<const Rational> ratios,
                                        const std::string &label);

/// Cost-dominance check: k >= 1 extra switches need at least k / r extra CodeA nodes, and
/// flexible_nodes * r < 1 forbids extra switches.
bool satisfies_cost_dominance(const BiasSweepRecord &record);

void write_bias_sweep_csv(std::ostream &out, const std::vector<BiasSweepRecord> &records);

size_t count_flexible_nodes(const Circuit &circuit, const GateSetConfig &config);

}  // namespace qswitch

#endif
