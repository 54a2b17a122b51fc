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

#ifndef ENTLAB_COMMIT_GAME_H
#define ENTLAB_COMMIT_GAME_H

#include <cstdint>

#include "entlab/nisbq.h"
#include "entlab/protocol.h"
#include "entlab/state.h"

namespace entlab {

/// rho: Phi^n with the commitment channel applied to B. sigma: I/2^n (x) |0^n> with the
/// same channel applied to B. Both mix all pads; lambda seeds the commitment randomness.
struct CommitPair {
    ClassicalQuantumState rho;
    ClassicalQuantumState sigma;
};

CommitPair make_commit_pair(int lambda, int n);

/// Distiller that knows the commitment permutation. B's input is the n padded qubits
/// followed by the 2n commitment words (16 classical bits each); B opens each word with
/// ORACLE COMMIT_INV and undoes the pad (X from the a-bits, then Z from the b-bits).
LoccProtocol commit_distiller_protocol(int n);

struct GameResult {
    double acceptance = 0.0;
    double std_error = 0.0;
    long trials = 0;
};

/// Per trial: draw a classical block by weight and an eigenvector of its quantum part,
/// run the distiller once, and accept with probability <Phi^m|output|Phi^m>.
GameResult distinguisher_game(const LoccProtocol &distiller, const ClassicalQuantumState &state, int m, long trials,
                              std::uint64_t seed);
GameResult distinguisher_game(const LoccProtocol &distiller, const DensityMatrix &state, int m, long trials,
                              std::uint64_t seed);

}  // namespace entlab

#endif
