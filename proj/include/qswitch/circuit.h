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

#ifndef QSWITCH_CIRCUIT_H
#define QSWITCH_CIRCUIT_H

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qswitch {

using QubitIndex = uint32_t;
using GateIndex = uint32_t;
using TimeStep = uint32_t;

/// Name of a logical gate kind. The default set is H, T, CNOT and ID; other names are allowed.
class GateKind {
   public:
    GateKind() = default;
    explicit GateKind(std::string name);

    static GateKind h();
    static GateKind t();
    static GateKind cnot();
    static GateKind id();

    const std::string &name() const {
        return name_;
    }
    bool is_identity() const;

    friend bool operator==(const GateKind &, const GateKind &) = default;
    friend std::strong_ordering operator<=>(const GateKind &, const GateKind &) = default;

   private:
    std::string name_;
};

struct Gate {
    GateIndex index = 0;
    GateKind kind;
    std::vector<QubitIndex> qubits;
    TimeStep time_step = 0;

    size_t arity() const {
        return qubits.size();
    }
    bool operator==(const Gate &) const = default;
};

/// An ordered gate list over `num_qubits` qubits.
///
/// Gates appended through `append` receive their ASAP time step immediately, so a circuit built
/// that way is always scheduled. Circuits constructed from a raw gate list keep the time steps they
/// were given until passed through `asap_schedule`.
class Circuit {
   public:
    explicit Circuit(size_t num_qubits = 0);
    Circuit(size_t num_qubits, std::vector<Gate> gates);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    const Gate &gate(GateIndex index) const {
        return gates_[index];
    }
    size_t size() const {
        return gates_.size();
    }
    bool empty() const {
        return gates_.empty();
    }

    /// Appends a gate, validating operands, and returns its index.
    GateIndex append(GateKind kind, std::vector<QubitIndex> qubits);

    /// Number of time steps spanned by the circuit (max time step + 1, or 0 if empty).
    size_t depth() const;

    /// Number of gates that are not identity markers.
    size_t num_operations() const;

    /// Canonical text form, readable by `parse_circuit`.
    std::string str() const;

    bool operator==(const Circuit &other) const = default;

   private:
    size_t num_qubits_;
    std::vector<Gate> gates_;
    std::vector<TimeStep> next_free_;
};

enum class ParseErrorKind {
    MalformedLine,
    QubitOutOfRange,
    DuplicateOperand,
    UnknownGate,
};

class ParseError : public std::invalid_argument {
   public:
    ParseError(ParseErrorKind kind, size_t line, const std::string &message);

    ParseErrorKind kind() const {
        return kind_;
    }
    /// 1-based line number, or 0 when the error is not tied to a line.
    size_t line() const {
        return line_;
    }

   private:
    ParseErrorKind kind_;
    size_t line_;
};

/// Parses the line-based circuit format:
///
///     qubits <n>
///     h <q> | t <q> | id <q> | cx <control> <target>
///
/// '#' starts a comment, blank lines are ignored. The result is ASAP scheduled.
Circuit parse_circuit(std::string_view text);

/// Reassigns every time step: one past the latest preceding gate on any shared qubit, or 0.
Circuit asap_schedule(const Circuit &circuit);

/// Mnemonic used by the text format for a gate kind ("cx" for CNOT, lower-case name otherwise).
std::string mnemonic(const GateKind &kind);

}  // namespace qswitch

#endif
