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

#include "entlab/execute.h"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <random>

#include "entlab/errors.h"
#include "entlab/simulator.h"

namespace entlab {

namespace {

constexpr double kBranchDrop = 1e-15;
constexpr double kProjectTol = 1e-9;

struct Layout {
    int a_len;   // n_a + t_a
    int b_base;  // first B slot
    int b_len;   // n_b + t_b
    int c_base;
    int total;
    CircuitBinding bind_a;
    CircuitBinding bind_b;
    std::vector<int> out_slots;
};

Layout make_layout(const LoccProtocol &p) {
    Layout l;
    l.a_len = p.n_a + p.t_a;
    l.b_base = l.a_len;
    l.b_len = p.n_b + p.t_b;
    l.c_base = l.b_base + l.b_len;
    l.total = l.c_base + p.c;
    for (int i = 0; i < l.a_len; i++) {
        l.bind_a.qubit_slots.push_back(i);
    }
    for (int i = 0; i < l.b_len; i++) {
        l.bind_b.qubit_slots.push_back(l.b_base + i);
    }
    for (int k = 0; k < p.c; k++) {
        l.bind_a.qubit_slots.push_back(l.c_base + k);
        l.bind_b.qubit_slots.push_back(l.c_base + k);
        l.bind_a.cbit_slots.push_back(l.c_base + k);
        l.bind_b.cbit_slots.push_back(l.c_base + k);
    }
    for (int i = 0; i < p.m_a; i++) {
        l.out_slots.push_back(i);
    }
    for (int i = 0; i < p.m_b; i++) {
        l.out_slots.push_back(l.b_base + i);
    }
    return l;
}

void check_input(const LoccProtocol &p, const ProtocolInput &input) {
    auto problems = validate(p);
    if (!problems.empty()) {
        throw std::invalid_argument("invalid protocol: " + problems.front());
    }
    int qa = side_qubits(input.quantum, Side::A);
    int qb = side_qubits(input.quantum, Side::B);
    if (qa + static_cast<int>(input.classical_a.size()) != p.n_a ||
        qb + static_cast<int>(input.classical_b.size()) != p.n_b) {
        throw DimensionError("input partition " + std::to_string(qa) + "+" + std::to_string(input.classical_a.size()) +
                             " : " + std::to_string(qb) + "+" + std::to_string(input.classical_b.size()) +
                             " does not match protocol nA=" + std::to_string(p.n_a) + ", nB=" + std::to_string(p.n_b));
    }
}

SparseRegister load_register(const Layout &l, const PureState &q, const ProtocolInput &input) {
    SparseRegister reg(l.total);
    std::vector<int> slots;
    for (int i = 0; i < q.n_a(); i++) {
        slots.push_back(i);
    }
    for (int i = 0; i < q.n_b(); i++) {
        slots.push_back(l.b_base + i);
    }
    for (size_t i = 0; i < input.classical_a.size(); i++) {
        reg.set_classical(q.n_a() + static_cast<int>(i), input.classical_a[i]);
    }
    for (size_t i = 0; i < input.classical_b.size(); i++) {
        reg.set_classical(l.b_base + q.n_b() + static_cast<int>(i), input.classical_b[i]);
    }
    reg.load(q.amplitudes(), slots);
    return reg;
}

AnyState extract_output(const LoccProtocol &p, const Layout &l, SparseRegister &reg, OutputMode mode) {
    reg.compact();
    Matrix m = reg.split_amplitudes(l.out_slots);
    if (mode == OutputMode::ProjectZero) {
        std::vector<bool> is_out(l.total, false);
        for (int s : l.out_slots) {
            is_out[s] = true;
        }
        double weight = m.col(0).squaredNorm();
        for (int s = 0; s < l.total; s++) {
            if (!is_out[s] && reg.is_classical(s) && reg.classical_value(s) != 0) {
                weight = 0.0;
            }
        }
        if (weight < 1.0 - kProjectTol) {
            throw std::runtime_error("discarded registers have weight " + std::to_string(weight) +
                                     " on |0...0>, expected 1");
        }
        return PureState::normalized(p.m_a, p.m_b, m.col(0));
    }
    if (m.cols() == 1) {
        return PureState::normalized(p.m_a, p.m_b, m.col(0));
    }
    Eigen::JacobiSVD<Matrix> svd;
    if (m.rows() <= 4096 && m.cols() <= 4096) {
        svd.compute(m, Eigen::ComputeThinU);
        const auto &sv = svd.singularValues();
        if (sv.size() < 2 || sv(1) * sv(1) <= kEigenFloor) {
            return PureState::normalized(p.m_a, p.m_b, svd.matrixU().col(0));
        }
    }
    if (p.m_a + p.m_b > kMaxDensityQubits) {
        throw ResourceError("mixed output on " + std::to_string(p.m_a + p.m_b) +
                            " qubits exceeds the density-matrix budget");
    }
    Matrix rho = m * m.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(p.m_a, p.m_b, (rho + rho.adjoint()) / 2.0);
}

/// Depth-first walk over measurement outcomes.
class BranchRunner {
   public:
    BranchRunner(const LoccProtocol &p, const Layout &l, OutputMode mode, double weight, std::vector<Branch> &out)
        : p_(p), l_(l), mode_(mode), weight_(weight), out_(out) {}

    void phase(SparseRegister reg, size_t round, int side, double prob, Transcript tr) {
        const LocalCircuit &circ = side == 0 ? p_.rounds[round].a : p_.rounds[round].b;
        const CircuitBinding &bind = side == 0 ? l_.bind_a : l_.bind_b;
        for (const Gate &g : circ.gates) {
            reg.apply(g, bind, p_.oracles.get());
        }
        measure(std::move(reg), round, side, 0, prob, std::move(tr), Bits{});
    }

   private:
    void measure(SparseRegister reg, size_t round, int side, int k, double prob, Transcript tr, Bits msg) {
        if (k == p_.c) {
            reg.compact();
            tr.push_back(std::move(msg));
            if (side == 0) {
                phase(std::move(reg), round, 1, prob, std::move(tr));
            } else if (round + 1 < p_.rounds.size()) {
                phase(std::move(reg), round + 1, 0, prob, std::move(tr));
            } else {
                finish(reg, prob, std::move(tr));
            }
            return;
        }
        int slot = l_.c_base + k;
        if (reg.is_classical(slot)) {
            msg.push_back(static_cast<std::uint8_t>(reg.classical_value(slot)));
            measure(std::move(reg), round, side, k + 1, prob, std::move(tr), std::move(msg));
            return;
        }
        double p1 = reg.probability_one(slot);
        double q[2] = {1.0 - p1, p1};
        bool take[2] = {prob * weight_ * q[0] > kBranchDrop, prob * weight_ * q[1] > kBranchDrop};
        for (int outcome = 0; outcome < 2; outcome++) {
            if (!take[outcome]) {
                continue;
            }
            bool last = outcome == 1 || !take[1];
            SparseRegister next = last ? SparseRegister(std::move(reg)) : SparseRegister(reg);
            next.collapse(slot, outcome);
            Bits m2 = msg;
            m2.push_back(static_cast<std::uint8_t>(outcome));
            measure(std::move(next), round, side, k + 1, prob * q[outcome], tr, std::move(m2));
        }
    }

    void finish(SparseRegister &reg, double prob, Transcript tr) {
        if (static_cast<int>(out_.size()) >= kMaxBranches) {
            throw ResourceError("branch budget of " + std::to_string(kMaxBranches) + " exceeded");
        }
        out_.push_back(Branch{prob * weight_, extract_output(p_, l_, reg, mode_), std::move(tr)});
    }

    const LoccProtocol &p_;
    const Layout &l_;
    OutputMode mode_;
    double weight_;
    std::vector<Branch> &out_;
};

std::vector<std::pair<double, PureState>> pure_components(const AnyState &state) {
    std::vector<std::pair<double, PureState>> out;
    if (const auto *ps = std::get_if<PureState>(&state)) {
        out.emplace_back(1.0, *ps);
        return out;
    }
    const auto &rho = std::get<DensityMatrix>(state);
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
    for (Eigen::Index i = es.eigenvalues().size() - 1; i >= 0; i--) {
        double w = es.eigenvalues()(i);
        if (w > kEigenFloor) {
            out.emplace_back(w, PureState::normalized(rho.n_a(), rho.n_b(), es.eigenvectors().col(i)));
        }
    }
    return out;
}

}  // namespace

SampledRun execute_sampled(const LoccProtocol &p, const ProtocolInput &input, std::uint64_t seed, OutputMode mode) {
    check_input(p, input);
    Layout l = make_layout(p);
    std::mt19937_64 rng(seed);
    PureState start = [&]() {
        auto comps = pure_components(input.quantum);
        if (comps.size() == 1) {
            return comps[0].second;
        }
        double u = uniform01(rng);
        for (auto &[w, s] : comps) {
            u -= w;
            if (u < 0) {
                return s;
            }
        }
        return comps.back().second;
    }();
    SparseRegister reg = load_register(l, start, input);
    Transcript tr;
    for (const Round &round : p.rounds) {
        for (int side = 0; side < 2; side++) {
            const LocalCircuit &circ = side == 0 ? round.a : round.b;
            const CircuitBinding &bind = side == 0 ? l.bind_a : l.bind_b;
            for (const Gate &g : circ.gates) {
                reg.apply(g, bind, p.oracles.get());
            }
            Bits msg;
            for (int k = 0; k < p.c; k++) {
                int slot = l.c_base + k;
                int outcome = reg.is_classical(slot) ? reg.classical_value(slot)
                                                     : (uniform01(rng) < reg.probability_one(slot) ? 1 : 0);
                reg.collapse(slot, outcome);
                msg.push_back(static_cast<std::uint8_t>(outcome));
            }
            reg.compact();
            tr.push_back(std::move(msg));
        }
    }
    return SampledRun{extract_output(p, l, reg, mode), std::move(tr), circuit_size(p)};
}

std::vector<Branch> execute_branches(const LoccProtocol &p, const ProtocolInput &input, OutputMode mode) {
    check_input(p, input);
    if (static_cast<long>(p.rounds.size()) * p.c > 16) {
        throw ResourceError("r*c = " + std::to_string(p.rounds.size() * p.c) + " measured bits exceed the branch budget");
    }
    Layout l = make_layout(p);
    std::vector<Branch> out;
    for (auto &[w, s] : pure_components(input.quantum)) {
        BranchRunner runner(p, l, mode, w, out);
        runner.phase(load_register(l, s, input), 0, 0, 1.0, Transcript{});
    }
    return out;
}

DensityMatrix channel_output(const LoccProtocol &p, const ProtocolInput &input, OutputMode mode) {
    if (p.m_a + p.m_b > kMaxDensityQubits) {
        throw ResourceError("channel output exceeds the density-matrix budget");
    }
    auto branches = execute_branches(p, input, mode);
    Eigen::Index dim = Eigen::Index{1} << (p.m_a + p.m_b);
    Matrix acc = Matrix::Zero(dim, dim);
    double total = 0.0;
    for (const auto &b : branches) {
        acc += b.probability * to_density(b.state).matrix();
        total += b.probability;
    }
    acc /= total;
    return DensityMatrix(p.m_a, p.m_b, (acc + acc.adjoint()) / 2.0);
}

Vector run_circuit(const LocalCircuit &circuit, const Vector &input, const OracleRegistry *oracles) {
    int w = circuit.width;
    if (input.size() != (Eigen::Index{1} << w)) {
        throw DimensionError("run_circuit: input length does not match width " + std::to_string(w));
    }
    SparseRegister reg(w);
    CircuitBinding bind;
    std::vector<int> slots;
    for (int i = 0; i < w; i++) {
        bind.qubit_slots.push_back(i);
        slots.push_back(i);
    }
    reg.load(input, slots);
    for (const Gate &g : circuit.gates) {
        reg.apply(g, bind, oracles);
    }
    return reg.split_amplitudes(slots).col(0);
}

Matrix circuit_unitary(const LocalCircuit &circuit, const OracleRegistry *oracles) {
    if (circuit.width > kMaxDensityQubits) {
        throw ResourceError("circuit_unitary is limited to " + std::to_string(kMaxDensityQubits) + " qubits");
    }
    Eigen::Index dim = Eigen::Index{1} << circuit.width;
    Matrix u(dim, dim);
    for (Eigen::Index j = 0; j < dim; j++) {
        u.col(j) = run_circuit(circuit, Vector::Unit(dim, j), oracles);
    }
    return u;
}

PureState apply_local_unitary(const PureState &state, Side side, const LocalCircuit &circuit,
                              const OracleRegistry *oracles) {
    int own = side == Side::A ? state.n_a() : state.n_b();
    int anc = circuit.ancilla_count;
    if (circuit.width != own + anc) {
        throw DimensionError("circuit width " + std::to_string(circuit.width) + " != side qubits " +
                             std::to_string(own) + " + ancillas " + std::to_string(anc));
    }
    auto problems = circuit_violations(circuit, 0, oracles);
    if (!problems.empty()) {
        throw std::invalid_argument("invalid circuit: " + problems.front());
    }
    // Slots: A side (own qubits then ancillas if acting on A), then B side.
    int a_len = side == Side::A ? own + anc : state.n_a();
    int b_len = side == Side::B ? own + anc : state.n_b();
    SparseRegister reg(a_len + b_len);
    std::vector<int> load_slots;
    for (int i = 0; i < state.n_a(); i++) {
        load_slots.push_back(i);
    }
    for (int i = 0; i < state.n_b(); i++) {
        load_slots.push_back(a_len + i);
    }
    reg.load(state.amplitudes(), load_slots);
    CircuitBinding bind;
    int base = side == Side::A ? 0 : a_len;
    for (int i = 0; i < own + anc; i++) {
        bind.qubit_slots.push_back(base + i);
    }
    for (const Gate &g : circuit.gates) {
        reg.apply(g, bind, oracles);
    }
    reg.compact();
    for (int i = own; i < own + anc; i++) {
        int s = base + i;
        if (!reg.is_classical(s) || reg.classical_value(s) != 0) {
            throw std::runtime_error("ancilla qubit " + std::to_string(i) + " did not return to |0>");
        }
    }
    Matrix m = reg.split_amplitudes(load_slots);
    return PureState::normalized(state.n_a(), state.n_b(), m.col(0));
}

DensityMatrix apply_local_unitary(const DensityMatrix &rho, Side side, const LocalCircuit &circuit,
                                  const OracleRegistry *oracles) {
    Eigen::Index dim = rho.matrix().rows();
    Matrix acc = Matrix::Zero(dim, dim);
    for (auto &[w, s] : pure_components(rho)) {
        PureState out = apply_local_unitary(s, side, circuit, oracles);
        acc += w * out.amplitudes() * out.amplitudes().adjoint();
    }
    acc /= acc.trace().real();
    return DensityMatrix(rho.n_a(), rho.n_b(), (acc + acc.adjoint()) / 2.0);
}

}  // namespace entlab
