// Copyright 2026 The entlab Authors
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

#include "entlab/circuit.h"

#include <algorithm>
#include <set>

#include "entlab/errors.h"

namespace entlab {

namespace {

struct GateInfo {
    GateKind kind;
    const char *name;
};

constexpr GateInfo kGates[] = {
    {GateKind::H, "H"},     {GateKind::X, "X"},     {GateKind::Z, "Z"},
    {GateKind::S, "S"},     {GateKind::T, "T"},     {GateKind::CNOT, "CNOT"},
    {GateKind::TOFFOLI, "TOFFOLI"}, {GateKind::CCX, "CCX"}, {GateKind::CCZ, "CCZ"},
    {GateKind::ORACLE, "ORACLE"},
};

size_t expected_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
            return 2;
        case GateKind::TOFFOLI:
            return 3;
        case GateKind::ORACLE:
            return 0;
        default:
            return 1;
    }
}

}  // namespace

const char *gate_name(GateKind kind) {
    for (const auto &g : kGates) {
        if (g.kind == kind) {
            return g.name;
        }
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(const std::string &upper_name) {
    for (const auto &g : kGates) {
        if (upper_name == g.name) {
            return g.kind;
        }
    }
    // Accepted aliases.
    if (upper_name == "CX") {
        return GateKind::CNOT;
    }
    if (upper_name == "CCNOT") {
        return GateKind::TOFFOLI;
    }
    if (upper_name == "CC-X") {
        return GateKind::CCX;
    }
    if (upper_name == "CC-Z") {
        return GateKind::CCZ;
    }
    return std::nullopt;
}

const char *oracle_role_name(OracleRole role) {
    switch (role) {
        case OracleRole::F:
            return "F";
        case OracleRole::FInv:
            return "FINV";
        case OracleRole::H:
            return "H";
        case OracleRole::HInv:
            return "HINV";
        case OracleRole::Other:
            break;
    }
    return "OTHER";
}

LocalCircuit &LocalCircuit::swap(int a, int b) {
    add(Gate::cnot(a, b));
    add(Gate::cnot(b, a));
    add(Gate::cnot(a, b));
    return *this;
}

void OracleRegistry::add(const std::string &handle, OracleEntry entry) {
    if (handle.empty()) {
        throw std::invalid_argument("oracle handle must be non-empty");
    }
    if (entry.width <= 0 || entry.width > 64 || !entry.apply) {
        throw std::invalid_argument("oracle '" + handle + "' needs a width in [1, 64] and a function");
    }
    entries_[handle] = std::move(entry);
}

const OracleEntry *OracleRegistry::find(const std::string &handle) const {
    auto it = entries_.find(handle);
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> OracleRegistry::handles() const {
    std::vector<std::string> out;
    for (const auto &[k, v] : entries_) {
        out.push_back(k);
    }
    return out;
}

std::vector<std::string> OracleRegistry::non_bijective_entries(int max_width) const {
    std::vector<std::string> bad;
    for (const auto &[name, e] : entries_) {
        if (e.width > max_width) {
            continue;
        }
        std::uint64_t size = std::uint64_t{1} << e.width;
        std::vector<bool> seen(size, false);
        for (std::uint64_t x = 0; x < size; x++) {
            std::uint64_t y = e.apply(x);
            if (y >= size || seen[y]) {
                bad.push_back(name);
                break;
            }
            seen[y] = true;
        }
    }
    return bad;
}

std::vector<std::string> circuit_violations(const LocalCircuit &circuit, int cbits, const OracleRegistry *oracles) {
    std::vector<std::string> out;
    for (size_t gi = 0; gi < circuit.gates.size(); gi++) {
        const Gate &g = circuit.gates[gi];
        std::string where = "gate " + std::to_string(gi) + " (" + gate_name(g.kind) + ")";
        size_t arity = expected_arity(g.kind);
        if (arity != 0 && g.qubits.size() != arity) {
            out.push_back(where + ": expected " + std::to_string(arity) + " qubit operands");
            continue;
        }
        for (int q : g.qubits) {
            if (q < 0 || q >= circuit.width) {
                out.push_back(where + ": qubit " + std::to_string(q) + " outside width " +
                              std::to_string(circuit.width));
            }
        }
        std::set<int> distinct(g.qubits.begin(), g.qubits.end());
        if (distinct.size() != g.qubits.size()) {
            out.push_back(where + ": controls and targets must be distinct");
        }
        if (g.kind == GateKind::CCX || g.kind == GateKind::CCZ) {
            if (g.cbit < 0 || g.cbit >= cbits) {
                out.push_back(where + ": classical bit c" + std::to_string(g.cbit) +
                              " outside communication register of " + std::to_string(cbits) + " bits");
            }
        }
        if (g.kind == GateKind::ORACLE) {
            if (g.qubits.empty()) {
                out.push_back(where + ": oracle call without qubits");
            }
            if (oracles != nullptr) {
                const OracleEntry *e = oracles->find(g.oracle);
                if (e == nullptr) {
                    out.push_back(where + ": unknown oracle handle '" + g.oracle + "'");
                } else if (static_cast<size_t>(e->width) != g.qubits.size()) {
                    out.push_back(where + ": oracle '" + g.oracle + "' has width " + std::to_string(e->width) +
                                  " but is applied to " + std::to_string(g.qubits.size()) + " qubits");
                }
            }
        }
    }
    return out;
}

}  // namespace entlab
