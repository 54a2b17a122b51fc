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

#ifndef ENTLAB_NISBQ_H
#define ENTLAB_NISBQ_H

#include <cstdint>
#include <vector>

#include "entlab/bits.h"
#include "entlab/state.h"

namespace entlab {

/// Contents of a classical register of 16-bit commitment words.
using CommitWords = std::vector<std::uint16_t>;

/// One block |row><col| (x) quantum of a classical-quantum operator.
struct CqBlock {
    CommitWords row;
    CommitWords col;
    Matrix quantum;
};

/// Operator on (quantum A:B) (x) (classical word register), stored block-sparse.
/// Diagonal blocks (row == col) carry the classical mixture; off-diagonal blocks are
/// coherences in the word register and make the state non-classical.
class ClassicalQuantumState {
   public:
    ClassicalQuantumState(int n_a, int n_b, int words);

    int n_a() const { return n_a_; }
    int n_b() const { return n_b_; }
    int words() const { return words_; }
    const std::vector<CqBlock> &blocks() const { return blocks_; }

    /// Adds |w><w| (x) quantum, merging with an existing diagonal block.
    void add(const CommitWords &w, const Matrix &quantum);
    void add_coherence(const CommitWords &row, const CommitWords &col, const Matrix &quantum);

    double trace() const;
    /// Frobenius weight of the off-diagonal blocks.
    double non_classical_weight() const;
    /// The quantum part with the word register traced out.
    DensityMatrix quantum_marginal() const;
    /// Word register contents as bits, 16 per word, MSB first.
    static Bits word_bits(const CommitWords &w);

   private:
    void check(const CommitWords &w, const Matrix &quantum) const;

    int n_a_;
    int n_b_;
    int words_;
    std::vector<CqBlock> blocks_;
};

enum class NisbqMode { Exact, Sampled };

inline constexpr int kMaxNisbqExactQubits = 3;

/// The commitment channel on the B side of `rho` (B has n qubits): apply
/// sigma_X(a) sigma_Z(b), then append commitments to a_1..a_n, b_1..b_n. Exact mode mixes
/// all 4^n pads (n <= 3) with one randomness draw per pad; sampled mode takes one draw.
ClassicalQuantumState nisbq_apply(int n, const DensityMatrix &rho, NisbqMode mode, std::uint64_t seed);

/// Opens every commitment word and undoes the pad. Throws if the word register carries
/// more than 1e-9 non-classical weight.
DensityMatrix nisbq_invert(const ClassicalQuantumState &state);

}  // namespace entlab

#endif
