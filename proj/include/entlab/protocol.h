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

#ifndef ENTLAB_PROTOCOL_H
#define ENTLAB_PROTOCOL_H

#include <string>
#include <vector>

#include "entlab/circuit.h"

namespace entlab {

struct Round {
    LocalCircuit a;
    LocalCircuit b;

    bool operator==(const Round &) const = default;
};

/// Two-party protocol in the register model: A acts on (A, A', C), then C is measured;
/// B acts on (B, B', C), then C is measured; repeated per round. The outputs are the
/// first m_a qubits of (A, A') and the first m_b qubits of (B, B').
///
/// Local qubit indices inside circuit_a are [0, n_a) for A, [n_a, n_a + t_a) for A',
/// then [n_a + t_a, n_a + t_a + c) for C; circuit_b likewise.
struct LoccProtocol {
    int n_a = 0;
    int n_b = 0;
    int t_a = 0;
    int t_b = 0;
    int c = 0;
    int m_a = 0;
    int m_b = 0;
    std::vector<Round> rounds;
    /// Resolves ORACLE handles; may be null for oracle-free protocols.
    OracleRegistryPtr oracles;

    int width_a() const { return n_a + t_a + c; }
    int width_b() const { return n_b + t_b + c; }

    /// A one-round protocol with empty circuits of the right widths.
    static LoccProtocol empty(int n_a, int n_b, int t_a, int t_b, int c, int m_a, int m_b);
};

struct ProtocolCost {
    long gate_count = 0;
    int rounds = 0;
    long comm_bits = 0;
    int epr_inputs = 0;
};

/// Structural violations; empty iff the protocol is well formed.
std::vector<std::string> validate(const LoccProtocol &p);

/// gate_count = circuit gates + (t_a + t_b) ancilla creations + rounds * c measurements.
ProtocolCost circuit_size(const LoccProtocol &p);

/// True iff there is one round and circuit_b never changes the computational value of a
/// communication bit (it may read C as a control or apply diagonal phases to it).
bool is_one_way(const LoccProtocol &p);

/// Standard teleportation of an l-qubit payload. A holds [payload (l), EPR halves (l)],
/// B holds its l EPR halves and receives the payload in place of them; c = 2l.
LoccProtocol teleportation_protocol(int ell);

/// Appends the sender half of teleportation: each payload qubit is Bell-measured against
/// its EPR half, writing the Z-correction bit to cbit_base + 2i and the X-correction bit
/// to cbit_base + 2i + 1 (C qubits start at local index c_offset).
void append_teleport_sender(LocalCircuit &circuit, const std::vector<int> &payload, const std::vector<int> &epr_halves,
                            int c_offset, int cbit_base);
void append_teleport_receiver(LocalCircuit &circuit, const std::vector<int> &epr_halves, int cbit_base);

}  // namespace entlab

#endif
