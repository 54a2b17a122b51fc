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

#include "entlab/protocol.h"

#include "entlab/errors.h"
#include "entlab/state.h"

namespace entlab {

LoccProtocol LoccProtocol::empty(int n_a, int n_b, int t_a, int t_b, int c, int m_a, int m_b) {
    LoccProtocol p;
    p.n_a = n_a;
    p.n_b = n_b;
    p.t_a = t_a;
    p.t_b = t_b;
    p.c = c;
    p.m_a = m_a;
    p.m_b = m_b;
    Round r;
    r.a.width = p.width_a();
    r.b.width = p.width_b();
    p.rounds.push_back(std::move(r));
    return p;
}

std::vector<std::string> validate(const LoccProtocol &p) {
    std::vector<std::string> out;
    if (p.n_a < 0 || p.n_b < 0 || p.t_a < 0 || p.t_b < 0 || p.c < 0 || p.m_a < 0 || p.m_b < 0) {
        out.push_back("register sizes must be non-negative");
    }
    if (p.m_a > p.n_a + p.t_a) {
        out.push_back("mA=" + std::to_string(p.m_a) + " exceeds nA+tA=" + std::to_string(p.n_a + p.t_a));
    }
    if (p.m_b > p.n_b + p.t_b) {
        out.push_back("mB=" + std::to_string(p.m_b) + " exceeds nB+tB=" + std::to_string(p.n_b + p.t_b));
    }
    if (p.rounds.empty()) {
        out.push_back("protocol needs at least one round");
    }
    const OracleRegistry *reg = p.oracles.get();
    for (size_t r = 0; r < p.rounds.size(); r++) {
        std::string tag = "round " + std::to_string(r + 1);
        const Round &rd = p.rounds[r];
        if (rd.a.width != p.width_a()) {
            out.push_back(tag + ": circuit A width " + std::to_string(rd.a.width) + " != nA+tA+c=" +
                          std::to_string(p.width_a()));
        }
        if (rd.b.width != p.width_b()) {
            out.push_back(tag + ": circuit B width " + std::to_string(rd.b.width) + " != nB+tB+c=" +
                          std::to_string(p.width_b()));
        }
        for (int side = 0; side < 2; side++) {
            const LocalCircuit &circ = side == 0 ? rd.a : rd.b;
            int c_offset = side == 0 ? p.n_a + p.t_a : p.n_b + p.t_b;
            for (const Gate &g : circ.gates) {
                if ((g.kind == GateKind::CCX || g.kind == GateKind::CCZ) && g.qubits.size() == 1 &&
                    g.qubits[0] == c_offset + g.cbit) {
                    out.push_back(tag + " " + (side == 0 ? "A" : "B") + ": " + gate_name(g.kind) + " c" +
                                  std::to_string(g.cbit) + " targets its own control bit");
                }
            }
        }
        for (const auto &v : circuit_violations(rd.a, p.c, reg)) {
            out.push_back(tag + " A " + v);
        }
        for (const auto &v : circuit_violations(rd.b, p.c, reg)) {
            out.push_back(tag + " B " + v);
        }
    }
    return out;
}

ProtocolCost circuit_size(const LoccProtocol &p) {
    ProtocolCost cost;
    for (const auto &r : p.rounds) {
        cost.gate_count += static_cast<long>(r.a.gates.size() + r.b.gates.size());
    }
    cost.rounds = static_cast<int>(p.rounds.size());
    cost.comm_bits = static_cast<long>(cost.rounds) * p.c;
    cost.gate_count += p.t_a + p.t_b + cost.comm_bits;
    cost.epr_inputs = std::min(p.n_a, p.n_b);
    return cost;
}

bool is_one_way(const LoccProtocol &p) {
    if (p.rounds.size() != 1) {
        return false;
    }
    int c_begin = p.n_b + p.t_b;
    auto in_c = [&](int q) { return q >= c_begin && q < c_begin + p.c; };
    for (const Gate &g : p.rounds[0].b.gates) {
        switch (g.kind) {
            case GateKind::Z:
            case GateKind::S:
            case GateKind::T:
            case GateKind::CCZ:
                break;
            case GateKind::ORACLE:
                for (int q : g.qubits) {
                    if (in_c(q)) {
                        return false;
                    }
                }
                break;
            default:
                if (!g.qubits.empty() && in_c(g.qubits.back())) {
                    return false;
                }
        }
    }
    return true;
}

void append_teleport_sender(LocalCircuit &circuit, const std::vector<int> &payload, const std::vector<int> &epr_halves,
                            int c_offset, int cbit_base) {
    if (payload.size() != epr_halves.size()) {
        throw DimensionError("teleportation needs one EPR half per payload qubit");
    }
    for (size_t i = 0; i < payload.size(); i++) {
        circuit.add(Gate::cnot(payload[i], epr_halves[i]));
        circuit.add(Gate::h(payload[i]));
        circuit.add(Gate::cnot(payload[i], c_offset + cbit_base + 2 * static_cast<int>(i)));
        circuit.add(Gate::cnot(epr_halves[i], c_offset + cbit_base + 2 * static_cast<int>(i) + 1));
    }
}

void append_teleport_receiver(LocalCircuit &circuit, const std::vector<int> &epr_halves, int cbit_base) {
    for (size_t i = 0; i < epr_halves.size(); i++) {
        circuit.add(Gate::ccx(cbit_base + 2 * static_cast<int>(i) + 1, epr_halves[i]));
        circuit.add(Gate::ccz(cbit_base + 2 * static_cast<int>(i), epr_halves[i]));
    }
}

LoccProtocol teleportation_protocol(int ell) {
    if (ell < 1) {
        throw DimensionError("teleportation needs at least one qubit");
    }
    if (3 * ell > kMaxPureQubits) {
        throw ResourceError("teleportation of " + std::to_string(ell) + " qubits exceeds the budget");
    }
    LoccProtocol p = LoccProtocol::empty(2 * ell, ell, 0, 0, 2 * ell, 0, ell);
    std::vector<int> payload, halves_a, halves_b;
    for (int i = 0; i < ell; i++) {
        payload.push_back(i);
        halves_a.push_back(ell + i);
        halves_b.push_back(i);
    }
    append_teleport_sender(p.rounds[0].a, payload, halves_a, p.n_a + p.t_a, 0);
    append_teleport_receiver(p.rounds[0].b, halves_b, 0);
    return p;
}

}  // namespace entlab
