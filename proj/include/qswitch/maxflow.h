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

#ifndef QSWITCH_MAXFLOW_H
#define QSWITCH_MAXFLOW_H

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qswitch/network.h"
#include "qswitch/rational.h"

namespace qswitch {

/// A flow on every edge of a network, in units of 1/scale.
struct FlowState {
    Int128 scale = 1;
    std::vector<Int128> edge_flow;
    Rational value;

    Rational flow(size_t edge) const {
        return Rational(edge_flow[edge], scale);
    }
};

/// Which minimum cut to report when several exist.
enum class CutSide : uint8_t {
    /// T is the set of nodes that can still reach the sink in the residual graph; every other node,
    /// including components unconnected to either terminal, lands on the source side.
    SourceMaximal,
    /// S is the set of nodes reachable from the source in the residual graph.
    SourceMinimal,
};

struct Cut {
    /// Indexed by NodeId.
    std::vector<bool> source_side;
    /// Indices into FlowNetwork::edges(), ascending.
    std::vector<size_t> cut_edges;
    Rational cost;

    bool in_source_side(NodeId node) const {
        return source_side[node];
    }
    std::vector<NodeId> source_nodes() const;
    std::vector<NodeId> sink_nodes() const;
};

/// Raised when the cheapest cut must sever an infinite edge, i.e. the constraints are contradictory.
class UnboundedCut : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Maximum s-t flow by Dinic's blocking-flow algorithm on exact scaled-integer capacities.
/// Parallel edges between the same pair of nodes are merged before solving.
FlowState max_flow(const FlowNetwork &net);

/// Minimum cut read off the residual graph of a maximum flow.
Cut min_cut(const FlowNetwork &net, const FlowState &flow, CutSide side = CutSide::SourceMaximal);

/// Capacity and conservation check; returns a description of the first violation.
std::optional<std::string> check_flow(const FlowNetwork &net, const FlowState &flow);

enum class CutViolationKind {
    PartitionInvalid,
    CutEdgeOmitted,
    SpuriousCutEdge,
    CostMismatch,
    InfiniteEdgeCut,
    NotSeparating,
};

const char *cut_violation_name(CutViolationKind kind);

struct CutViolation {
    CutViolationKind kind;
    std::string message;
    /// Offending edge index, when the violation has one.
    std::optional<size_t> edge;
};

/// Independent certificate check of a cut: partition, completeness of the cut-edge list, cost, and
/// that deleting the cut edges leaves no directed source-to-sink path.
std::optional<CutViolation> verify_cut(const FlowNetwork &net, const Cut &cut);

}  // namespace qswitch

#endif
