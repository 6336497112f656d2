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

#include "qswitch/bench.h"

#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace qswitch {

namespace {

std::string decimal(double v) {
    std::ostringstream out;
    out << std::setprecision(12) << v;
    return out.str();
}

struct Stats {
    double mean = 0;
    double stddev = 0;
};

Stats stats_of(const std::vector<double> &xs) {
    Stats s;
    if (xs.empty()) {
        return s;
    }
    for (double x : xs) {
        s.mean += x;
    }
    s.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double acc = 0;
        for (double x : xs) {
            acc += (x - s.mean) * (x - s.mean);
        }
        s.stddev = std::sqrt(acc / static_cast<double>(xs.size() - 1));
    }
    return s;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig &config) {
    struct Job {
        size_t n;
        size_t steps;
        uint64_t seed;
    };
    std::vector<Job> jobs;
    for (size_t n : config.sizes) {
        for (size_t r = 0; r < config.reps; r++) {
            jobs.push_back({n, config.steps.value_or(2 * n), config.base_seed + r});
        }
    }
    std::vector<BenchRecord> records(jobs.size());
    const std::string fingerprint = config.options.build.fingerprint();
    std::atomic<size_t> next{0};

    auto worker = [&]() {
        for (size_t k = next++; k < jobs.size(); k = next++) {
            const Job &job = jobs[k];
            Circuit circuit = generate_random(job.n, job.steps, config.dist, job.seed);
            auto start = std::chrono::steady_clock::now();
            CompiledCircuit compiled = compile(circuit, config.gate_set, config.options);
            auto stop = std::chrono::steady_clock::now();

            BenchRecord &rec = records[k];
            rec.n = job.n;
            rec.steps = job.steps;
            rec.dist = config.dist.name;
            rec.seed = job.seed;
            rec.num_switches = compiled.metrics.switch_count;
            rec.ops_in_code_a = compiled.metrics.ops_in_code_a;
            rec.ops_in_code_b = compiled.metrics.ops_in_code_b;
            rec.depth_no_switch = compiled.metrics.depth_no_switch;
            rec.depth_with_switch = compiled.metrics.depth_with_switch;
            rec.time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
            rec.fingerprint = fingerprint;
        }
    };

    size_t threads = std::max<size_t>(1, std::min(config.jobs, jobs.size()));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_lock;
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back([&]() {
                try {
                    worker();
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_lock);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    next = jobs.size();
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return records;
}

void write_bench_csv(std::ostream &out, const std::vector<BenchRecord> &records) {
    out << "n,steps,dist,seed,num_switches,ops_in_code_a,ops_in_code_b,depth_no_switch,depth_with_switch,time_ms,"
           "fingerprint\n";
    for (const BenchRecord &r : records) {
        out << r.n << ',' << r.steps << ',' << r.dist << ',' << r.seed << ',' << r.num_switches << ','
            << r.ops_in_code_a << ',' << r.ops_in_code_b << ',' << r.depth_no_switch << ',' << r.depth_with_switch
            << ',' << std::fixed << std::setprecision(3) << r.time_ms << std::defaultfloat << ',' << r.fingerprint
            << '\n';
    }
}

void write_bench_summary(std::ostream &out, const std::vector<BenchRecord> &records) {
    std::map<size_t, std::vector<const BenchRecord *>> by_size;
    for (const BenchRecord &r : records) {
        by_size[r.n].push_back(&r);
    }
    for (const auto &[n, rows] : by_size) {
        std::vector<double> sw, depth, depth_sw, time;
        for (const BenchRecord *r : rows) {
            sw.push_back(static_cast<double>(r->num_switches));
            depth.push_back(static_cast<double>(r->depth_no_switch));
            depth_sw.push_back(static_cast<double>(r->depth_with_switch));
            time.push_back(r->time_ms);
        }
        Stats s = stats_of(sw), d = stats_of(depth), ds = stats_of(depth_sw), t = stats_of(time);
        out << std::fixed << std::setprecision(2) << "n=" << n << " runs=" << rows.size() << " switches=" << s.mean
            << "+-" << s.stddev << " depth=" << d.mean << " depth_with_switch=" << ds.mean << "+-" << ds.stddev
            << " time_ms=" << t.mean << "+-" << t.stddev << std::defaultfloat << "\n";
    }
}

size_t count_flexible_nodes(const Circuit &circuit, const GateSetConfig &config) {
    size_t total = 0;
    for (const Gate &g : circuit.gates()) {
        if (!g.kind.is_identity() && config.membership(g.kind) == CodeMembership::Both) {
            total += g.arity();
        }
    }
    return total;
}

std::vector<BiasSweepRecord> bias_sweep(const Circuit &circuit, const GateSetConfig &config,
                                        const CompileOptions &base, std::span<const Rational> ratios,
                                        const std::string &label) {
    CompileOptions unbiased = base;
    unbiased.build.bias.reset();
    CompiledCircuit reference = compile(circuit, config, unbiased);
    size_t flexible = count_flexible_nodes(circuit, config);

    std::vector<BiasSweepRecord> out;
    for (const Rational &ratio : ratios) {
        CompileOptions biased = unbiased;
        biased.build.bias = BiasOptions::from_ratio(ratio);
        CompiledCircuit result = compile(circuit, config, biased);

        BiasSweepRecord rec;
        rec.circuit = label;
        rec.ratio = ratio;
        rec.b_source = biased.build.bias->b_source;
        rec.b_sink = biased.build.bias->b_sink;
        rec.base_switches = reference.metrics.switch_count;
        rec.switches = result.metrics.switch_count;
        rec.extra_switches = static_cast<int64_t>(rec.switches) - static_cast<int64_t>(rec.base_switches);
        rec.base_code_a_nodes = reference.metrics.ops_in_code_a;
        rec.code_a_nodes = result.metrics.ops_in_code_a;
        rec.extra_code_a_nodes = static_cast<int64_t>(rec.code_a_nodes) - static_cast<int64_t>(rec.base_code_a_nodes);
        rec.flexible_nodes = flexible;
        out.push_back(std::move(rec));
    }
    return out;
}

bool satisfies_cost_dominance(const BiasSweepRecord &record) {
    if (record.extra_switches < 0) {
        return false;
    }
    if (record.extra_switches >= 1) {
        Rational needed = Rational(record.extra_switches) / record.ratio;
        if (Rational(record.extra_code_a_nodes) < needed) {
            return false;
        }
    }
    if (Rational(static_cast<Int128>(record.flexible_nodes)) * record.ratio < Rational(1) &&
        record.extra_switches != 0) {
        return false;
    }
    return true;
}

void write_bias_sweep_csv(std::ostream &out, const std::vector<BiasSweepRecord> &records) {
    out << "circuit,ratio,b_source,b_sink,base_switches,switches,extra_switches,base_code_a_nodes,code_a_nodes,"
           "extra_code_a_nodes,flexible_nodes\n";
    for (const BiasSweepRecord &r : records) {
        out << r.circuit << ',' << decimal(r.ratio.to_double()) << ',' << decimal(r.b_source.to_double()) << ','
            << decimal(r.b_sink.to_double()) << ',' << r.base_switches << ',' << r.switches << ',' << r.extra_switches
            << ',' << r.base_code_a_nodes << ',' << r.code_a_nodes << ',' << r.extra_code_a_nodes << ','
            << r.flexible_nodes << '\n';
    }
}

}  // namespace qswitch
