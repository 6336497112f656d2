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

#include "qswitch/cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qswitch/bench.h"
#include "qswitch/compile.h"
#include "qswitch/dimacs.h"
#include "qswitch/generator.h"
#include "qswitch/oracle.h"

namespace qswitch {

namespace {

class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << contents)) {
        throw InputError("cannot write '" + path + "'");
    }
}

Circuit load_circuit(const std::string &path) {
    return parse_circuit(read_file(path));
}

/// Flags shared by every subcommand that compiles.
struct CompileFlags {
    bool one_way = false;
    bool idle_bonus = false;
    std::string bias;
    uint32_t d_switch = 2;
    std::string cut = "source-maximal";

    void attach(CLI::App *cmd, bool with_bias = true) {
        cmd->add_flag("--one-way", one_way, "Allow mixed-code CNOTs with control in B and target in A.");
        cmd->add_flag("--idle-bonus", idle_bonus, "Prefer switch locations where the qubit idles.");
        if (with_bias) {
            cmd->add_option("--bias", bias, "Bias ratio r: b_sink = r, b_source = 2r (prefers code A).");
        }
        cmd->add_option("--d-switch", d_switch, "Switch duration in time steps.")->check(CLI::PositiveNumber);
        cmd->add_option("--cut", cut, "Minimum cut to report among ties.")
            ->check(CLI::IsMember({"source-maximal", "source-minimal"}));
    }

    CompileOptions options() const {
        CompileOptions opts;
        opts.build.one_way_cnot = one_way;
        opts.build.idle_bonus = idle_bonus;
        opts.build.d_switch = d_switch;
        if (!bias.empty()) {
            opts.build.bias = BiasOptions::from_ratio(Rational::parse(bias));
        }
        opts.cut_side = cut == "source-minimal" ? CutSide::SourceMinimal : CutSide::SourceMaximal;
        opts.build.validate();
        return opts;
    }
};

std::vector<Rational> parse_ratios(const std::vector<std::string> &texts) {
    std::vector<Rational> out;
    for (const std::string &t : texts) {
        out.push_back(Rational::parse(t));
    }
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Minimal code-switching compiler for two-code fault-tolerant circuits.", "qswitch"};
    app.require_subcommand(1);

    // gen
    size_t gen_qubits = 0;
    size_t gen_steps = 0;
    std::string gen_dist = "even";
    uint64_t gen_seed = 0;
    std::string gen_out;
    CLI::App *gen = app.add_subcommand("gen", "Generate a random {H, T, CNOT, ID} circuit.");
    gen->add_option("--qubits", gen_qubits, "Number of qubits.")->required()->check(CLI::PositiveNumber);
    gen->add_option("--steps", gen_steps, "Number of time steps (default: 2 * qubits).");
    gen->add_option("--dist", gen_dist, "Gate distribution.")->check(CLI::IsMember({"even", "cnot-heavy"}));
    gen->add_option("--seed", gen_seed, "Random seed.");
    gen->add_option("-o,--out", gen_out, "Output path (default: stdout).");

    // compile
    std::string compile_in;
    std::string compile_format = "json";
    std::string compile_dimacs;
    CompileFlags compile_flags;
    CLI::App *compile_cmd = app.add_subcommand("compile", "Compute the minimal switching plan of a circuit.");
    compile_cmd->add_option("input", compile_in, "Circuit file.")->required();
    compile_cmd->add_option("--format", compile_format, "Output format.")->check(CLI::IsMember({"json", "text"}));
    compile_cmd->add_option("--dimacs", compile_dimacs, "Also write the flow network in DIMACS format.");
    compile_flags.attach(compile_cmd);

    // oracle
    std::string oracle_in;
    bool oracle_one_way = false;
    CLI::App *oracle_cmd = app.add_subcommand("oracle", "Brute-force the optimum and compare with the min cut.");
    oracle_cmd->add_option("input", oracle_in, "Circuit file.")->required();
    oracle_cmd->add_flag("--one-way", oracle_one_way, "Allow one-way CNOTs.");

    // bench
    std::vector<size_t> bench_sizes;
    size_t bench_reps = 10;
    size_t bench_steps = 0;
    std::string bench_dist = "even";
    uint64_t bench_seed = 0;
    std::string bench_out;
    size_t bench_jobs = 1;
    CompileFlags bench_flags;
    CLI::App *bench = app.add_subcommand("bench", "Compile seeded random circuits and record metrics as CSV.");
    bench->add_option("--sizes", bench_sizes, "Qubit counts, comma separated.")->required()->delimiter(',');
    bench->add_option("--reps", bench_reps, "Circuits per size.")->check(CLI::PositiveNumber);
    bench->add_option("--steps", bench_steps, "Time steps per circuit (default: 2 * n).");
    bench->add_option("--dist", bench_dist, "Gate distribution.")->check(CLI::IsMember({"even", "cnot-heavy"}));
    bench->add_option("--seed", bench_seed, "Base seed; replicate r uses seed + r.");
    bench->add_option("--out", bench_out, "CSV output path (default: stdout).");
    bench->add_option("--jobs", bench_jobs, "Worker threads.")->check(CLI::PositiveNumber);
    bench_flags.attach(bench);

    // bias-sweep
    std::string sweep_in;
    size_t sweep_qubits = 0;
    size_t sweep_steps = 0;
    size_t sweep_count = 1;
    std::string sweep_dist = "even";
    uint64_t sweep_seed = 0;
    std::vector<std::string> sweep_ratios{"0.1", "0.01", "0.001"};
    std::string sweep_out;
    CompileFlags sweep_flags;
    CLI::App *sweep = app.add_subcommand("bias-sweep", "Trade switches for code-A operations over bias ratios.");
    auto *sweep_in_opt = sweep->add_option("input", sweep_in, "Circuit file (or use the generator flags).");
    auto *sweep_qubits_opt = sweep->add_option("--qubits", sweep_qubits, "Generate circuits with this many qubits.");
    sweep_in_opt->excludes(sweep_qubits_opt);
    sweep->add_option("--steps", sweep_steps, "Time steps of generated circuits (default: 2 * qubits).");
    sweep->add_option("--count", sweep_count, "Number of generated circuits.")->check(CLI::PositiveNumber);
    sweep->add_option("--dist", sweep_dist, "Gate distribution.")->check(CLI::IsMember({"even", "cnot-heavy"}));
    sweep->add_option("--seed", sweep_seed, "Base seed; circuit c uses seed + c.");
    sweep->add_option("--ratios", sweep_ratios, "Bias ratios, comma separated.")->delimiter(',');
    sweep->add_option("--out", sweep_out, "CSV output path (default: stdout).");
    sweep_flags.attach(sweep, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (gen->parsed()) {
            GenDistribution dist = GenDistribution::by_name(gen_dist);
            size_t steps = gen_steps == 0 ? 2 * gen_qubits : gen_steps;
            std::string text = generate_random(gen_qubits, steps, dist, gen_seed).str();
            if (gen_out.empty()) {
                out << text;
            } else {
                write_file(gen_out, text);
            }
            return kExitOk;
        }

        GateSetConfig config = GateSetConfig::color_codes();

        if (compile_cmd->parsed()) {
            CompileOptions opts = compile_flags.options();
            Circuit circuit = load_circuit(compile_in);
            validate_against_gateset(circuit, config);
            if (!compile_dimacs.empty()) {
                std::ostringstream dimacs;
                export_dimacs(build_network(circuit, config, opts.build), dimacs);
                write_file(compile_dimacs, dimacs.str());
            }
            CompiledCircuit result = compile(circuit, config, opts);
            out << (compile_format == "json" ? to_json(result) : to_text(result));
            return kExitOk;
        }

        if (oracle_cmd->parsed()) {
            Circuit circuit = load_circuit(oracle_in);
            validate_against_gateset(circuit, config);
            OracleResult best;
            try {
                best = brute_force_min_switches(circuit, config, oracle_one_way);
            } catch (const OracleTooLarge &e) {
                err << "error: " << e.what() << " free choices: " << e.free_choices() << "\n";
                return kExitOracleTooLarge;
            }
            CompileOptions opts;
            opts.build.one_way_cnot = oracle_one_way;
            CompiledCircuit result = compile(circuit, config, opts);
            if (result.metrics.switch_count == best.optimum) {
                out << "optimum=" << best.optimum << " MATCH\n";
                return kExitOk;
            }
            out << "optimum=" << best.optimum << " mincut=" << result.metrics.switch_count << " MISMATCH\n";
            return kExitVerificationFailure;
        }

        if (bench->parsed()) {
            BenchConfig cfg;
            cfg.sizes = bench_sizes;
            cfg.reps = bench_reps;
            if (bench_steps > 0) {
                cfg.steps = bench_steps;
            }
            cfg.dist = GenDistribution::by_name(bench_dist);
            cfg.base_seed = bench_seed;
            cfg.options = bench_flags.options();
            cfg.jobs = bench_jobs;
            std::vector<BenchRecord> records = run_bench(cfg);
            std::ostringstream csv;
            write_bench_csv(csv, records);
            if (bench_out.empty()) {
                out << csv.str();
            } else {
                write_file(bench_out, csv.str());
            }
            write_bench_summary(err, records);
            return kExitOk;
        }

        if (sweep->parsed()) {
            CompileOptions opts = sweep_flags.options();
            std::vector<Rational> ratios = parse_ratios(sweep_ratios);
            for (const Rational &r : ratios) {
                BuildOptions probe;
                probe.bias = BiasOptions::from_ratio(r);
                probe.validate();
            }
            std::vector<BiasSweepRecord> records;
            if (!sweep_in.empty()) {
                Circuit circuit = load_circuit(sweep_in);
                validate_against_gateset(circuit, config);
                records = bias_sweep(circuit, config, opts, ratios, sweep_in);
            } else if (sweep_qubits > 0) {
                GenDistribution dist = GenDistribution::by_name(sweep_dist);
                size_t steps = sweep_steps == 0 ? 2 * sweep_qubits : sweep_steps;
                for (size_t c = 0; c < sweep_count; c++) {
                    uint64_t seed = sweep_seed + c;
                    Circuit circuit = generate_random(sweep_qubits, steps, dist, seed);
                    auto rows = bias_sweep(circuit, config, opts, ratios, "seed=" + std::to_string(seed));
                    records.insert(records.end(), rows.begin(), rows.end());
                }
            } else {
                err << "error: bias-sweep needs an input file or --qubits\n";
                return kExitInputError;
            }
            std::ostringstream csv;
            write_bias_sweep_csv(csv, records);
            if (sweep_out.empty()) {
                out << csv.str();
            } else {
                write_file(sweep_out, csv.str());
            }
            return kExitOk;
        }
    } catch (const VerificationError &e) {
        err << "internal verification failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const InconsistentCut &e) {
        err << "internal verification failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace qswitch
