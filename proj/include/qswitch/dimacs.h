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

#ifndef QSWITCH_DIMACS_H
#define QSWITCH_DIMACS_H

#include <iosfwd>
#include <string_view>

#include "qswitch/network.h"

namespace qswitch {

/// Common denominator that turns every finite capacity and the infinite sentinel into an integer.
Int128 capacity_scale(const FlowNetwork &net);

/// Writes the network in DIMACS max-flow format:
///
///     p max <nodes> <arcs>
///     n 1 s
///     n 2 t
///     a <u> <v> <capacity>
///
/// Node k is written as k+1. Capacities are multiplied by `capacity_scale(net)`; infinite edges
/// are written as the scaled sentinel. Throws std::ios_base::failure if the stream fails.
void export_dimacs(const FlowNetwork &net, std::ostream &out);

/// Reads a DIMACS max-flow problem. The source becomes node 0, the sink node 1 and the remaining
/// nodes follow in increasing DIMACS id. All arcs are imported as finite coupling edges.
FlowNetwork import_dimacs(std::string_view text);

}  // namespace qswitch

#endif
