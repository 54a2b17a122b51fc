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

#include "entlab/simulator.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "entlab/errors.h"

namespace entlab {

namespace {

inline std::uint64_t bit(int pos) {
    return std::uint64_t{1} << pos;
}

const Complex kHadamard[4] = {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2,
                              -std::numbers::sqrt2 / 2};

Complex phase_of(GateKind kind) {
    switch (kind) {
        case GateKind::Z:
            return -1.0;
        case GateKind::S:
            return Complex(0.0, 1.0);
        case GateKind::T:
            return std::polar(1.0, std::numbers::pi / 4);
        default:
            return 1.0;
    }
}

}  // namespace

SparseRegister::SparseRegister(int num_slots, int max_active)
    : max_active_(max_active), classical_(num_slots, 0), pos_(num_slots, -1), amps_(Vector::Ones(1)) {
}

int SparseRegister::classical_value(int slot) const {
    if (!is_classical(slot)) {
        throw std::logic_error("slot " + std::to_string(slot) + " is not classical");
    }
    return classical_[slot];
}

void SparseRegister::set_classical(int slot, int value) {
    if (!is_classical(slot)) {
        throw std::logic_error("slot " + std::to_string(slot) + " is not classical");
    }
    classical_[slot] = value & 1;
}

void SparseRegister::load(const Vector &amplitudes, const std::vector<int> &slots) {
    int s = static_cast<int>(slots.size());
    if (amplitudes.size() != (Eigen::Index{1} << s)) {
        throw DimensionError("load: amplitude count does not match slot count");
    }
    for (int slot : slots) {
        if (!is_classical(slot) || classical_[slot] != 0) {
            throw std::logic_error("load: slot " + std::to_string(slot) + " is not a fresh |0> slot");
        }
    }
    int k = active_count();
    if (k + s > max_active_) {
        compact();
        k = active_count();
        if (k + s > max_active_) {
            throw ResourceError("loading " + std::to_string(s) + " qubits exceeds the active-qubit budget of " +
                                std::to_string(max_active_));
        }
    }
    Vector next(Eigen::Index{1} << (k + s));
    for (Eigen::Index x = 0; x < amplitudes.size(); x++) {
        next.segment(x << k, Eigen::Index{1} << k) = amplitudes(x) * amps_;
    }
    amps_ = std::move(next);
    for (int j = 0; j < s; j++) {
        int p = k + s - 1 - j;
        pos_[slots[j]] = p;
    }
    slot_at_pos_.resize(k + s);
    for (int j = 0; j < s; j++) {
        slot_at_pos_[k + s - 1 - j] = slots[j];
    }
}

void SparseRegister::activate(int slot) {
    int k = active_count();
    if (k + 1 > max_active_) {
        throw ResourceError("active-qubit budget of " + std::to_string(max_active_) + " exceeded");
    }
    Eigen::Index half = amps_.size();
    Vector next = Vector::Zero(2 * half);
    next.segment(classical_[slot] ? half : 0, half) = amps_;
    amps_ = std::move(next);
    pos_[slot] = k;
    slot_at_pos_.push_back(slot);
}

void SparseRegister::remove_position(int p, int value) {
    int k = active_count();
    Eigen::Index out_size = Eigen::Index{1} << (k - 1);
    Vector next(out_size);
    std::uint64_t low_mask = bit(p) - 1;
    for (Eigen::Index j = 0; j < out_size; j++) {
        auto u = static_cast<std::uint64_t>(j);
        std::uint64_t old = ((u & ~low_mask) << 1) | (static_cast<std::uint64_t>(value) << p) | (u & low_mask);
        next(j) = amps_(static_cast<Eigen::Index>(old));
    }
    amps_ = std::move(next);
    int slot = slot_at_pos_[p];
    pos_[slot] = -1;
    classical_[slot] = value;
    slot_at_pos_.erase(slot_at_pos_.begin() + p);
    for (int q = p; q < k - 1; q++) {
        pos_[slot_at_pos_[q]] = q;
    }
}

void SparseRegister::apply_single(int p, const Complex m[4], std::uint64_t ctrl_mask) {
    std::uint64_t b = bit(p);
    auto n = static_cast<std::uint64_t>(amps_.size());
    for (std::uint64_t i = 0; i < n; i++) {
        if ((i & b) || (i & ctrl_mask) != ctrl_mask) {
            continue;
        }
        Complex a0 = amps_(i);
        Complex a1 = amps_(i | b);
        amps_(i) = m[0] * a0 + m[1] * a1;
        amps_(i | b) = m[2] * a0 + m[3] * a1;
    }
}

void SparseRegister::apply_x(int p, std::uint64_t ctrl_mask) {
    std::uint64_t b = bit(p);
    auto n = static_cast<std::uint64_t>(amps_.size());
    for (std::uint64_t i = 0; i < n; i++) {
        if ((i & b) || (i & ctrl_mask) != ctrl_mask) {
            continue;
        }
        std::swap(amps_(i), amps_(i | b));
    }
}

void SparseRegister::apply_phase(int p, Complex phase, std::uint64_t ctrl_mask) {
    std::uint64_t mask = bit(p) | ctrl_mask;
    auto n = static_cast<std::uint64_t>(amps_.size());
    for (std::uint64_t i = 0; i < n; i++) {
        if ((i & mask) == mask) {
            amps_(i) *= phase;
        }
    }
}

void SparseRegister::apply(const Gate &gate, const CircuitBinding &binding, const OracleRegistry *oracles) {
    // Activation never compacts, so positions stay stable while a gate is applied.
    if (active_count() + static_cast<int>(gate.qubits.size()) > max_active_) {
        compact();
    }
    auto slot_of = [&](int q) {
        if (q < 0 || q >= static_cast<int>(binding.qubit_slots.size())) {
            throw DimensionError("gate qubit " + std::to_string(q) + " outside circuit binding");
        }
        return binding.qubit_slots[q];
    };
    auto cbit_slot = [&](int c) {
        if (c < 0 || c >= static_cast<int>(binding.cbit_slots.size())) {
            throw DimensionError("classical bit c" + std::to_string(c) + " outside communication register");
        }
        return binding.cbit_slots[c];
    };

    // Controlled X / Z with classical controls folded away.
    auto controlled = [&](const std::vector<int> &control_slots, int target, bool phase_flip) {
        std::uint64_t cm = 0;
        for (int c : control_slots) {
            if (is_classical(c)) {
                if (classical_[c] == 0) {
                    return;
                }
            } else {
                cm |= bit(pos_[c]);
            }
        }
        if (phase_flip) {
            if (is_classical(target)) {
                if (classical_[target] == 0) {
                    return;
                }
                if (cm == 0) {
                    amps_ *= -1.0;
                    return;
                }
                // Phase on the active controls being all ones.
                auto n = static_cast<std::uint64_t>(amps_.size());
                for (std::uint64_t i = 0; i < n; i++) {
                    if ((i & cm) == cm) {
                        amps_(i) = -amps_(i);
                    }
                }
                return;
            }
            apply_phase(pos_[target], -1.0, cm);
            return;
        }
        if (cm == 0 && is_classical(target)) {
            classical_[target] ^= 1;
            return;
        }
        if (is_classical(target)) {
            activate(target);
        }
        apply_x(pos_[target], cm);
    };

    switch (gate.kind) {
        case GateKind::H: {
            int s = slot_of(gate.qubits.at(0));
            if (is_classical(s)) {
                activate(s);
            }
            apply_single(pos_[s], kHadamard, 0);
            return;
        }
        case GateKind::X:
            controlled({}, slot_of(gate.qubits.at(0)), false);
            return;
        case GateKind::Z:
        case GateKind::S:
        case GateKind::T: {
            int s = slot_of(gate.qubits.at(0));
            Complex ph = phase_of(gate.kind);
            if (is_classical(s)) {
                if (classical_[s]) {
                    amps_ *= ph;
                }
            } else {
                apply_phase(pos_[s], ph, 0);
            }
            return;
        }
        case GateKind::CNOT:
            controlled({slot_of(gate.qubits.at(0))}, slot_of(gate.qubits.at(1)), false);
            return;
        case GateKind::TOFFOLI:
            controlled({slot_of(gate.qubits.at(0)), slot_of(gate.qubits.at(1))}, slot_of(gate.qubits.at(2)), false);
            return;
        case GateKind::CCX:
            controlled({cbit_slot(gate.cbit)}, slot_of(gate.qubits.at(0)), false);
            return;
        case GateKind::CCZ:
            controlled({cbit_slot(gate.cbit)}, slot_of(gate.qubits.at(0)), true);
            return;
        case GateKind::ORACLE: {
            std::vector<int> slots;
            slots.reserve(gate.qubits.size());
            for (int q : gate.qubits) {
                slots.push_back(slot_of(q));
            }
            apply_oracle(gate, slots, oracles);
            return;
        }
    }
}

void SparseRegister::apply_oracle(const Gate &gate, const std::vector<int> &slots, const OracleRegistry *oracles) {
    if (oracles == nullptr) {
        throw std::invalid_argument("oracle '" + gate.oracle + "' applied without an oracle registry");
    }
    const OracleEntry *entry = oracles->find(gate.oracle);
    if (entry == nullptr) {
        throw std::invalid_argument("unknown oracle handle '" + gate.oracle + "'");
    }
    int w = static_cast<int>(slots.size());
    if (entry->width != w) {
        throw DimensionError("oracle '" + gate.oracle + "' has width " + std::to_string(entry->width) +
                             " but was applied to " + std::to_string(w) + " qubits");
    }

    // Input value contributed by classical slots, and (oracle bit, register position) for active ones.
    auto classical_part = [&]() {
        std::uint64_t v = 0;
        for (int k = 0; k < w; k++) {
            if (is_classical(slots[k]) && classical_[slots[k]]) {
                v |= bit(w - 1 - k);
            }
        }
        return v;
    };
    auto active_bits = [&]() {
        std::vector<std::pair<int, int>> ab;
        for (int k = 0; k < w; k++) {
            if (!is_classical(slots[k])) {
                ab.emplace_back(w - 1 - k, pos_[slots[k]]);
            }
        }
        return ab;
    };

    auto ab = active_bits();
    if (ab.empty()) {
        std::uint64_t out = entry->apply(classical_part());
        for (int k = 0; k < w; k++) {
            classical_[slots[k]] = static_cast<int>((out >> (w - 1 - k)) & 1);
        }
        return;
    }

    // Pass 1: which classical slots receive a value that varies over the support.
    std::uint64_t cval = classical_part();
    auto n = static_cast<std::uint64_t>(amps_.size());
    std::vector<int> constant(w, -1);  // -1 unseen, 0/1 constant, 2 varies
    for (std::uint64_t i = 0; i < n; i++) {
        if (amps_(i) == Complex(0.0)) {
            continue;
        }
        std::uint64_t in = cval;
        for (auto [obit, p] : ab) {
            if ((i >> p) & 1) {
                in |= bit(obit);
            }
        }
        std::uint64_t out = entry->apply(in);
        for (int k = 0; k < w; k++) {
            if (!is_classical(slots[k])) {
                continue;
            }
            int b = static_cast<int>((out >> (w - 1 - k)) & 1);
            if (constant[k] == -1) {
                constant[k] = b;
            } else if (constant[k] != b) {
                constant[k] = 2;
            }
        }
    }
    for (int k = 0; k < w; k++) {
        if (is_classical(slots[k]) && constant[k] == 2) {
            activate(slots[k]);
        }
    }

    // Pass 2: permute the support.
    ab = active_bits();
    n = static_cast<std::uint64_t>(amps_.size());
    std::uint64_t active_mask = 0;
    for (auto [obit, p] : ab) {
        active_mask |= bit(p);
    }
    Vector next = Vector::Zero(amps_.size());
    for (std::uint64_t i = 0; i < n; i++) {
        if (amps_(i) == Complex(0.0)) {
            continue;
        }
        std::uint64_t in = cval;
        for (auto [obit, p] : ab) {
            if ((i >> p) & 1) {
                in |= bit(obit);
            }
        }
        std::uint64_t out = entry->apply(in);
        std::uint64_t j = i & ~active_mask;
        for (auto [obit, p] : ab) {
            if ((out >> obit) & 1) {
                j |= bit(p);
            }
        }
        next(j) += amps_(i);
    }
    amps_ = std::move(next);
    for (int k = 0; k < w; k++) {
        if (is_classical(slots[k]) && constant[k] >= 0 && constant[k] <= 1) {
            classical_[slots[k]] = constant[k];
        }
    }
    compact();
}

double SparseRegister::probability_one(int slot) const {
    if (is_classical(slot)) {
        return classical_[slot];
    }
    std::uint64_t b = bit(pos_[slot]);
    double p1 = 0.0;
    auto n = static_cast<std::uint64_t>(amps_.size());
    for (std::uint64_t i = 0; i < n; i++) {
        if (i & b) {
            p1 += std::norm(amps_(i));
        }
    }
    return p1 / amps_.squaredNorm();
}

void SparseRegister::collapse(int slot, int outcome) {
    outcome &= 1;
    if (is_classical(slot)) {
        if (classical_[slot] != outcome) {
            throw std::logic_error("collapse onto a zero-probability outcome");
        }
        return;
    }
    remove_position(pos_[slot], outcome);
    double norm = amps_.norm();
    if (norm == 0.0) {
        throw std::logic_error("collapse onto a zero-probability outcome");
    }
    amps_ /= norm;
}

void SparseRegister::compact(double tol) {
    int k = active_count();
    if (k == 0) {
        return;
    }
    std::vector<double> w1(k, 0.0);
    double total = 0.0;
    auto n = static_cast<std::uint64_t>(amps_.size());
    for (std::uint64_t i = 0; i < n; i++) {
        double w = std::norm(amps_(i));
        if (w == 0.0) {
            continue;
        }
        total += w;
        for (std::uint64_t rest = i; rest != 0; rest &= rest - 1) {
            w1[std::countr_zero(rest)] += w;
        }
    }
    bool removed = false;
    for (int p = k - 1; p >= 0; p--) {
        if (w1[p] <= tol * total) {
            remove_position(p, 0);
            removed = true;
        } else if (total - w1[p] <= tol * total) {
            remove_position(p, 1);
            removed = true;
        }
    }
    if (removed) {
        amps_ /= amps_.norm();
    }
}

std::vector<int> SparseRegister::rest_active_slots(const std::vector<int> &out_slots) const {
    std::vector<bool> is_out(num_slots(), false);
    for (int s : out_slots) {
        is_out[s] = true;
    }
    std::vector<int> rest;
    for (int s : slot_at_pos_) {
        if (!is_out[s]) {
            rest.push_back(s);
        }
    }
    return rest;
}

Matrix SparseRegister::split_amplitudes(const std::vector<int> &out_slots) const {
    std::vector<int> rest = rest_active_slots(out_slots);
    int o = static_cast<int>(out_slots.size());
    int r = static_cast<int>(rest.size());
    std::uint64_t row_const = 0;
    std::vector<std::pair<int, int>> row_bits;  // (row bit, position)
    for (int k = 0; k < o; k++) {
        int s = out_slots[k];
        if (is_classical(s)) {
            if (classical_[s]) {
                row_const |= bit(o - 1 - k);
            }
        } else {
            row_bits.emplace_back(o - 1 - k, pos_[s]);
        }
    }
    Matrix m = Matrix::Zero(Eigen::Index{1} << o, Eigen::Index{1} << r);
    auto n = static_cast<std::uint64_t>(amps_.size());
    for (std::uint64_t i = 0; i < n; i++) {
        std::uint64_t row = row_const;
        for (auto [rb, p] : row_bits) {
            if ((i >> p) & 1) {
                row |= bit(rb);
            }
        }
        std::uint64_t col = 0;
        for (int k = 0; k < r; k++) {
            if ((i >> pos_[rest[k]]) & 1) {
                col |= bit(r - 1 - k);
            }
        }
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = amps_(i);
    }
    return m;
}

}  // namespace entlab
