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

#include "qswitch/dimacs.h"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qswitch {

Int128 capacity_scale(const FlowNetwork &net) {
    Int128 scale = net.infinite_sentinel().den();
    for (const CapEdge &e : net.edges()) {
        if (!e.capacity.infinite) {
            scale = lcm128(scale, e.capacity.value.den());
        }
    }
    return scale;
}

void export_dimacs(const FlowNetwork &net, std::ostream &out) {
    Int128 scale = capacity_scale(net);
    out << "p max " << net.num_nodes() << " " << net.edges().size() << "\n";
    out << "n " << kSourceNode + 1 << " s\n";
    out << "n " << kSinkNode + 1 << " t\n";
    for (const CapEdge &e : net.edges()) {
        Rational scaled = net.effective_capacity(e) * Rational(scale);
        out << "a " << e.from + 1 << " " << e.to + 1 << " " << int128_to_string(scaled.num()) << "\n";
    }
    if (!out) {
        throw std::ios_base::failure("Failed to write DIMACS output.");
    }
}

FlowNetwork import_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_number = 0;
    size_t declared_nodes = 0;
    size_t declared_arcs = 0;
    bool have_problem = false;
    uint64_t source_id = 0;
    uint64_t sink_id = 0;
    struct RawArc {
        uint64_t u, v;
        Rational cap;
    };
    std::vector<RawArc> arcs;

    auto fail = [&line_number](const std::string &msg) {
        return std::invalid_argument("DIMACS line " + std::to_string(line_number) + ": " + msg);
    };

    while (std::getline(in, line)) {
        line_number++;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag) || tag == "c") {
            continue;
        }
        if (tag == "p") {
            std::string kind;
            if (have_problem || !(fields >> kind >> declared_nodes >> declared_arcs) || kind != "max") {
                throw fail("expected a single 'p max <nodes> <arcs>' line.");
            }
            have_problem = true;
        } else if (tag == "n") {
            uint64_t id = 0;
            std::string role;
            if (!(fields >> id >> role) || id == 0 || id > declared_nodes) {
                throw fail("bad node designator.");
            }
            if (role == "s") {
                source_id = id;
            } else if (role == "t") {
                sink_id = id;
            } else {
                throw fail("node role must be 's' or 't'.");
            }
        } else if (tag == "a") {
            uint64_t u = 0, v = 0;
            std::string cap;
            if (!have_problem || !(fields >> u >> v >> cap) || u == 0 || v == 0 || u > declared_nodes ||
                v > declared_nodes) {
                throw fail("bad arc.");
            }
            arcs.push_back({u, v, Rational::parse(cap)});
        } else {
            throw fail("unknown line type '" + tag + "'.");
        }
    }
    if (!have_problem || source_id == 0 || sink_id == 0 || source_id == sink_id) {
        throw std::invalid_argument("DIMACS input needs a problem line and distinct source and sink.");
    }
    if (arcs.size() != declared_arcs) {
        throw std::invalid_argument("DIMACS arc count does not match the problem line.");
    }

    std::vector<NodeId> remap(declared_nodes + 1, 0);
    std::vector<NodeRef> nodes{NodeRef::source(), NodeRef::sink()};
    for (uint64_t id = 1; id <= declared_nodes; id++) {
        if (id == source_id) {
            remap[id] = kSourceNode;
        } else if (id == sink_id) {
            remap[id] = kSinkNode;
        } else {
            remap[id] = static_cast<NodeId>(nodes.size());
            nodes.push_back(NodeRef::gate_qubit(static_cast<GateIndex>(nodes.size() - 2), 0));
        }
    }
    std::vector<CapEdge> edges;
    edges.reserve(arcs.size());
    for (const RawArc &a : arcs) {
        edges.push_back(CapEdge{remap[a.u], remap[a.v], Capacity::finite(a.cap), EdgeKind::GateCoupling});
    }
    return FlowNetwork(std::move(nodes), std::move(edges));
}

}  // namespace qswitch
