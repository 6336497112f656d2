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

#include "qswitch/circuit.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace qswitch {

namespace {

void check_operands(size_t num_qubits, const std::vector<QubitIndex> &qubits) {
    if (qubits.empty()) {
        throw std::invalid_argument("Gate without operands.");
    }
    for (size_t a = 0; a < qubits.size(); a++) {
        if (qubits[a] >= num_qubits) {
            throw std::invalid_argument(
                "Qubit " + std::to_string(qubits[a]) + " out of range for a " + std::to_string(num_qubits) +
                "-qubit circuit.");
        }
        for (size_t b = 0; b < a; b++) {
            if (qubits[a] == qubits[b]) {
                throw std::invalid_argument("Duplicate operand " + std::to_string(qubits[a]) + ".");
            }
        }
    }
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) {
            k++;
        }
        size_t start = k;
        while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) {
            k++;
        }
        if (k > start) {
            tokens.push_back(line.substr(start, k - start));
        }
    }
    return tokens;
}

bool parse_uint(std::string_view token, uint64_t &out) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) {
            return c >= '0' && c <= '9';
        })) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char &c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

}  // namespace

GateKind::GateKind(std::string name) : name_(std::move(name)) {
}

GateKind GateKind::h() {
    return GateKind("H");
}
GateKind GateKind::t() {
    return GateKind("T");
}
GateKind GateKind::cnot() {
    return GateKind("CNOT");
}
GateKind GateKind::id() {
    return GateKind("ID");
}

bool GateKind::is_identity() const {
    return name_ == "ID";
}

Circuit::Circuit(size_t num_qubits) : num_qubits_(num_qubits), next_free_(num_qubits, 0) {
}

Circuit::Circuit(size_t num_qubits, std::vector<Gate> gates)
    : num_qubits_(num_qubits), gates_(std::move(gates)), next_free_(num_qubits, 0) {
    for (size_t k = 0; k < gates_.size(); k++) {
        if (gates_[k].index != k) {
            throw std::invalid_argument("Gate at position " + std::to_string(k) + " has index " +
                                        std::to_string(gates_[k].index) + ".");
        }
        check_operands(num_qubits_, gates_[k].qubits);
        for (QubitIndex q : gates_[k].qubits) {
            next_free_[q] = std::max(next_free_[q], gates_[k].time_step + 1);
        }
    }
}

GateIndex Circuit::append(GateKind kind, std::vector<QubitIndex> qubits) {
    check_operands(num_qubits_, qubits);
    TimeStep step = 0;
    for (QubitIndex q : qubits) {
        step = std::max(step, next_free_[q]);
    }
    for (QubitIndex q : qubits) {
        next_free_[q] = step + 1;
    }
    auto index = static_cast<GateIndex>(gates_.size());
    gates_.push_back(Gate{index, std::move(kind), std::move(qubits), step});
    return index;
}

size_t Circuit::depth() const {
    size_t depth = 0;
    for (const Gate &g : gates_) {
        depth = std::max(depth, static_cast<size_t>(g.time_step) + 1);
    }
    return depth;
}

size_t Circuit::num_operations() const {
    return std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) {
        return !g.kind.is_identity();
    });
}

std::string Circuit::str() const {
    std::ostringstream out;
    out << "qubits " << num_qubits_ << "\n";
    for (const Gate &g : gates_) {
        out << mnemonic(g.kind);
        for (QubitIndex q : g.qubits) {
            out << ' ' << q;
        }
        out << '\n';
    }
    return out.str();
}

ParseError::ParseError(ParseErrorKind kind, size_t line, const std::string &message)
    : std::invalid_argument(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      kind_(kind),
      line_(line) {
}

std::string mnemonic(const GateKind &kind) {
    if (kind == GateKind::cnot()) {
        return "cx";
    }
    return lower(kind.name());
}

Circuit parse_circuit(std::string_view text) {
    bool have_header = false;
    Circuit circuit;
    size_t line_number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_number++;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_tokens(line);
        if (tokens.empty()) {
            continue;
        }
        std::string head = lower(tokens[0]);

        if (!have_header) {
            uint64_t n = 0;
            if (head != "qubits" || tokens.size() != 2 || !parse_uint(tokens[1], n) || n == 0 || n > UINT32_MAX) {
                throw ParseError(ParseErrorKind::MalformedLine, line_number,
                                 "expected 'qubits <n>' with n >= 1 as the first statement.");
            }
            circuit = Circuit(static_cast<size_t>(n));
            have_header = true;
            continue;
        }

        GateKind kind;
        size_t arity = 0;
        if (head == "h") {
            kind = GateKind::h();
            arity = 1;
        } else if (head == "t") {
            kind = GateKind::t();
            arity = 1;
        } else if (head == "id") {
            kind = GateKind::id();
            arity = 1;
        } else if (head == "cx" || head == "cnot") {
            kind = GateKind::cnot();
            arity = 2;
        } else if (head == "qubits") {
            throw ParseError(ParseErrorKind::MalformedLine, line_number, "duplicate 'qubits' statement.");
        } else {
            throw ParseError(ParseErrorKind::UnknownGate, line_number,
                             "unknown gate '" + std::string(tokens[0]) + "'.");
        }
        if (tokens.size() != arity + 1) {
            throw ParseError(ParseErrorKind::MalformedLine, line_number,
                             "gate '" + head + "' takes " + std::to_string(arity) + " operand(s).");
        }
        std::vector<QubitIndex> qubits;
        for (size_t k = 1; k < tokens.size(); k++) {
            uint64_t q = 0;
            if (!parse_uint(tokens[k], q)) {
                throw ParseError(ParseErrorKind::MalformedLine, line_number,
                                 "bad qubit index '" + std::string(tokens[k]) + "'.");
            }
            if (q >= circuit.num_qubits()) {
                throw ParseError(ParseErrorKind::QubitOutOfRange, line_number,
                                 "qubit " + std::string(tokens[k]) + " out of range (declared " +
                                     std::to_string(circuit.num_qubits()) + ").");
            }
            if (std::find(qubits.begin(), qubits.end(), q) != qubits.end()) {
                throw ParseError(ParseErrorKind::DuplicateOperand, line_number,
                                 "duplicate operand " + std::to_string(q) + ".");
            }
            qubits.push_back(static_cast<QubitIndex>(q));
        }
        circuit.append(std::move(kind), std::move(qubits));
    }
    if (!have_header) {
        throw ParseError(ParseErrorKind::MalformedLine, 0, "missing 'qubits <n>' statement.");
    }
    return circuit;
}

Circuit asap_schedule(const Circuit &circuit) {
    Circuit out(circuit.num_qubits());
    for (const Gate &g : circuit.gates()) {
        out.append(g.kind, g.qubits);
    }
    return out;
}

}  // namespace qswitch
