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

#ifndef ENTLAB_EXECUTE_H
#define ENTLAB_EXECUTE_H

#include <cstdint>
#include <vector>

#include "entlab/bits.h"
#include "entlab/protocol.h"
#include "entlab/state.h"

namespace entlab {

/// Protocol input: a quantum state over the leading qubits of A and B, followed on each
/// side by classical basis bits (keys, commitment words). The A register is
/// [quantum.n_a() qubits][classical_a], so n_a = quantum.n_a() + classical_a.size().
struct ProtocolInput {
    AnyState quantum;
    Bits classical_a;
    Bits classical_b;

    ProtocolInput(AnyState q) : quantum(std::move(q)) {}
    ProtocolInput(PureState q) : quantum(std::move(q)) {}
    ProtocolInput(DensityMatrix q) : quantum(std::move(q)) {}
    ProtocolInput(AnyState q, Bits a, Bits b) : quantum(std::move(q)), classical_a(std::move(a)), classical_b(std::move(b)) {}
};

enum class OutputMode {
    /// Discarded qubits are traced out.
    Trace,
    /// Discarded qubits are projected onto |0...0>; fails if their weight is below 1 - 1e-9.
    ProjectZero,
};

/// Per round: the C contents measured after A's circuit, then after B's circuit.
using Transcript = std::vector<Bits>;

struct SampledRun {
    AnyState output;
    Transcript transcript;
    ProtocolCost cost;
};

struct Branch {
    double probability = 0.0;
    AnyState state;
    Transcript transcript;
};

SampledRun execute_sampled(const LoccProtocol &p, const ProtocolInput &input, std::uint64_t seed,
                           OutputMode mode = OutputMode::Trace);

/// Every measurement trajectory with its exact probability. Trajectories of probability
/// at most 1e-15 are dropped. A mixed input is split into its eigenvectors, each run
/// separately, so one transcript may appear in several branches.
std::vector<Branch> execute_branches(const LoccProtocol &p, const ProtocolInput &input,
                                     OutputMode mode = OutputMode::Trace);

/// Probability-weighted mixture of execute_branches.
DensityMatrix channel_output(const LoccProtocol &p, const ProtocolInput &input, OutputMode mode = OutputMode::Trace);

inline constexpr int kMaxBranches = 1 << 16;

/// Applies a single-party circuit to one side. The circuit width must equal the side's
/// qubit count plus circuit.ancilla_count; ancillas start in |0> and must end in |0>.
PureState apply_local_unitary(const PureState &state, Side side, const LocalCircuit &circuit,
                              const OracleRegistry *oracles = nullptr);
DensityMatrix apply_local_unitary(const DensityMatrix &rho, Side side, const LocalCircuit &circuit,
                                  const OracleRegistry *oracles = nullptr);

/// Runs a circuit on a width-qubit vector (qubit 0 most significant).
Vector run_circuit(const LocalCircuit &circuit, const Vector &input, const OracleRegistry *oracles = nullptr);

/// Dense unitary of a circuit of width at most 12.
Matrix circuit_unitary(const LocalCircuit &circuit, const OracleRegistry *oracles = nullptr);

}  // namespace entlab

#endif
