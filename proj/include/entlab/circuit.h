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

#ifndef ENTLAB_CIRCUIT_H
#define ENTLAB_CIRCUIT_H

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace entlab {

enum class GateKind { H, X, Z, S, T, CNOT, TOFFOLI, CCX, CCZ, ORACLE };

const char *gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(const std::string &upper_name);

/// One gate of a local circuit.
///
/// `qubits` holds controls first and the target last (H/X/Z/S/T: {t}; CNOT: {c, t};
/// TOFFOLI: {c1, c2, t}; CCX/CCZ: {t}). CCX/CCZ are controlled by bit `cbit` of the
/// communication register. ORACLE applies the registered bijection `oracle` to the
/// listed qubits, the first listed qubit being the most significant input bit.
struct Gate {
    GateKind kind;
    std::vector<int> qubits;
    int cbit = -1;
    std::string oracle;

    static Gate h(int q) { return {GateKind::H, {q}, -1, {}}; }
    static Gate x(int q) { return {GateKind::X, {q}, -1, {}}; }
    static Gate z(int q) { return {GateKind::Z, {q}, -1, {}}; }
    static Gate s(int q) { return {GateKind::S, {q}, -1, {}}; }
    static Gate t(int q) { return {GateKind::T, {q}, -1, {}}; }
    static Gate cnot(int c, int t) { return {GateKind::CNOT, {c, t}, -1, {}}; }
    static Gate toffoli(int c1, int c2, int t) { return {GateKind::TOFFOLI, {c1, c2, t}, -1, {}}; }
    static Gate ccx(int cbit, int t) { return {GateKind::CCX, {t}, cbit, {}}; }
    static Gate ccz(int cbit, int t) { return {GateKind::CCZ, {t}, cbit, {}}; }
    static Gate oracle_call(std::string handle, std::vector<int> qubits) {
        return {GateKind::ORACLE, std::move(qubits), -1, std::move(handle)};
    }

    bool operator==(const Gate &) const = default;
};

struct LocalCircuit {
    int width = 0;
    std::vector<Gate> gates;
    /// Qubits appended after the side's own qubits, starting in |0>.
    int ancilla_count = 0;

    LocalCircuit &add(Gate g) {
        gates.push_back(std::move(g));
        return *this;
    }
    /// SWAP as three CNOTs.
    LocalCircuit &swap(int a, int b);

    bool operator==(const LocalCircuit &) const = default;
};

enum class OracleRole { F, FInv, H, HInv, Other };

const char *oracle_role_name(OracleRole role);

/// A reversible function on `width`-bit basis values, applied coherently by ORACLE gates.
struct OracleEntry {
    OracleRole role = OracleRole::Other;
    int width = 0;
    std::function<std::uint64_t(std::uint64_t)> apply;
};

class OracleRegistry {
   public:
    void add(const std::string &handle, OracleEntry entry);
    const OracleEntry *find(const std::string &handle) const;
    std::vector<std::string> handles() const;
    /// Exhaustively checks that every entry of width <= max_width is a bijection.
    std::vector<std::string> non_bijective_entries(int max_width = 20) const;

   private:
    std::map<std::string, OracleEntry> entries_;
};

using OracleRegistryPtr = std::shared_ptr<const OracleRegistry>;

/// Structural problems of a circuit given the register sizes it lives in; empty when valid.
/// `cbits` is the communication register width visible to CCX/CCZ.
std::vector<std::string> circuit_violations(const LocalCircuit &circuit, int cbits, const OracleRegistry *oracles);

}  // namespace entlab

#endif
