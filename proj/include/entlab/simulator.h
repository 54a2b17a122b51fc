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

#ifndef ENTLAB_SIMULATOR_H
#define ENTLAB_SIMULATOR_H

#include <cstdint>
#include <vector>

#include "entlab/circuit.h"
#include "entlab/state.h"

namespace entlab {

/// Maps a circuit's local qubit indices and communication bits onto register slots.
struct CircuitBinding {
    std::vector<int> qubit_slots;
    std::vector<int> cbit_slots;
};

/// State-vector register over a fixed set of qubit slots.
///
/// Slots known to hold a computational basis value are tracked as classical bits and
/// take no space in the amplitude vector; a slot is promoted to the vector only when a
/// gate puts it in superposition or entangles it, and `compact()` demotes slots that
/// have become definite again. Only promoted ("active") slots count against the budget,
/// which keeps wide protocols with mostly-classical registers (keys, commitments,
/// measured communication bits) cheap to simulate.
class SparseRegister {
   public:
    explicit SparseRegister(int num_slots, int max_active = kMaxPureQubits);

    int num_slots() const { return static_cast<int>(classical_.size()); }
    int active_count() const { return static_cast<int>(slot_at_pos_.size()); }
    bool is_classical(int slot) const { return pos_[slot] < 0; }
    int classical_value(int slot) const;
    void set_classical(int slot, int value);

    /// Places `amplitudes` (over slots.size() qubits, slots[0] most significant) into
    /// slots that are currently classical |0>, tensoring with the existing content.
    void load(const Vector &amplitudes, const std::vector<int> &slots);

    void apply(const Gate &gate, const CircuitBinding &binding, const OracleRegistry *oracles);

    double probability_one(int slot) const;
    /// Projects `slot` onto `outcome`, renormalizes, and leaves the slot classical.
    void collapse(int slot, int outcome);
    /// Demotes every active slot whose weight on one value is at most `tol`.
    void compact(double tol = 1e-13);

    /// Amplitudes reshaped as rows over `out_slots` (out_slots[0] most significant,
    /// classical slots included at their fixed value) and columns over the remaining
    /// active slots in `rest_slots()` order.
    Matrix split_amplitudes(const std::vector<int> &out_slots) const;
    std::vector<int> rest_active_slots(const std::vector<int> &out_slots) const;

    const Vector &vector() const { return amps_; }

   private:
    void activate(int slot);
    void remove_position(int pos, int value);
    void apply_single(int pos, const Complex m[4], std::uint64_t ctrl_mask);
    void apply_x(int pos, std::uint64_t ctrl_mask);
    void apply_phase(int pos, Complex phase, std::uint64_t ctrl_mask);
    void apply_oracle(const Gate &gate, const std::vector<int> &slots, const OracleRegistry *oracles);

    int max_active_;
    std::vector<int> classical_;    // value for classical slots
    std::vector<int> pos_;          // bit position in amps_, or -1
    std::vector<int> slot_at_pos_;  // inverse of pos_
    Vector amps_;
};

}  // namespace entlab

#endif
