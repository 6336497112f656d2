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

#ifndef QSWITCH_TESTS_TEST_SUPPORT_H
#define QSWITCH_TESTS_TEST_SUPPORT_H

#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>
#include <boost/graph/read_dimacs.hpp>

#include "qswitch/circuit.h"
#include "qswitch/network.h"

namespace qswitch::testing {

inline std::string data_path(const std::string &name) {
    return std::string(QSWITCH_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_data(const std::string &name) {
    std::ifstream in(data_path(name));
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Random circuit with exactly `num_ops` non-identity gates from {H, T, CNOT}, plus occasional
/// identity gates. Requires num_qubits >= 2.
inline Circuit random_small_circuit(std::mt19937_64 &rng, size_t num_qubits, size_t num_ops) {
    Circuit c(num_qubits);
    auto pick = [&](uint64_t bound) {
        return static_cast<QubitIndex>(rng() % bound);
    };
    size_t ops = 0;
    while (ops < num_ops) {
        switch (rng() % 7) {
            case 0:
            case 1:
                c.append(GateKind::h(), {pick(num_qubits)});
                ops++;
                break;
            case 2:
            case 3:
                c.append(GateKind::t(), {pick(num_qubits)});
                ops++;
                break;
            case 4:
            case 5: {
                QubitIndex a = pick(num_qubits);
                QubitIndex b = pick(num_qubits - 1);
                if (b >= a) {
                    b++;
                }
                c.append(GateKind::cnot(), {a, b});
                ops++;
                break;
            }
            default:
                c.append(GateKind::id(), {pick(num_qubits)});
                break;
        }
    }
    return c;
}

/// Minimum s-t cut by enumerating every partition of the non-terminal nodes (up to ~20 of them).
inline Rational brute_force_min_cut(const FlowNetwork &net) {
    size_t inner = net.num_nodes() - 2;
    Rational best = net.infinite_sentinel() * Rational(static_cast<Int128>(net.edges().size() + 1));
    for (uint64_t mask = 0; mask < (uint64_t{1} << inner); mask++) {
        auto in_s = [&](NodeId v) {
            if (v == kSourceNode) {
                return true;
            }
            if (v == kSinkNode) {
                return false;
            }
            return ((mask >> (v - 2)) & 1) != 0;
        };
        Rational cost(0);
        for (const CapEdge &e : net.edges()) {
            if (in_s(e.from) && !in_s(e.to)) {
                cost += net.effective_capacity(e);
            }
        }
        if (cost < best) {
            best = cost;
        }
    }
    return best;
}

/// Max-flow value of a DIMACS problem computed by Boost's push-relabel implementation.
inline long boost_max_flow(const std::string &dimacs) {
    using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
    using Graph = boost::adjacency_list<
        boost::vecS, boost::vecS, boost::directedS, boost::no_property,
        boost::property<boost::edge_capacity_t, long,
                        boost::property<boost::edge_residual_capacity_t, long,
                                        boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
    Graph g;
    auto capacity = boost::get(boost::edge_capacity, g);
    auto reverse = boost::get(boost::edge_reverse, g);
    auto residual = boost::get(boost::edge_residual_capacity, g);
    Traits::vertex_descriptor s, t;
    // Boost's reader rejects problems whose source or sink has no incident arc, so add a zero-capacity
    // source->sink arc; it cannot change the flow value.
    std::istringstream lines(dimacs);
    std::ostringstream padded;
    std::string line, source_id, sink_id;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string tag, a, b;
        fields >> tag >> a >> b;
        if (tag == "p") {
            std::string node_count;
            std::istringstream p(line);
            size_t arcs = 0;
            p >> tag >> a >> node_count >> arcs;
            padded << "p max " << node_count << " " << arcs + 1 << "\n";
            continue;
        }
        if (tag == "n") {
            (b == "s" ? source_id : sink_id) = a;
        }
        padded << line << "\n";
    }
    padded << "a " << source_id << " " << sink_id << " 0\n";
    std::istringstream in(padded.str());
    if (boost::read_dimacs_max_flow(g, capacity, reverse, s, t, in) != 0) {
        throw std::invalid_argument("Boost rejected the DIMACS problem.");
    }
    return boost::push_relabel_max_flow(g, s, t, capacity, residual, reverse, boost::get(boost::vertex_index, g));
}

}  // namespace qswitch::testing

#endif
