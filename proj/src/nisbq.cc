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

#include "entlab/nisbq.h"

#include <cmath>
#include <random>

#include "entlab/commitment.h"
#include "entlab/errors.h"

namespace entlab {

ClassicalQuantumState::ClassicalQuantumState(int n_a, int n_b, int words) : n_a_(n_a), n_b_(n_b), words_(words) {
    if (n_a + n_b > kMaxDensityQubits) {
        throw ResourceError("quantum part exceeds the density-matrix budget");
    }
}

void ClassicalQuantumState::check(const CommitWords &w, const Matrix &quantum) const {
    Eigen::Index dim = Eigen::Index{1} << (n_a_ + n_b_);
    if (static_cast<int>(w.size()) != words_ || quantum.rows() != dim || quantum.cols() != dim) {
        throw DimensionError("classical-quantum block has the wrong shape");
    }
}

void ClassicalQuantumState::add(const CommitWords &w, const Matrix &quantum) {
    check(w, quantum);
    for (auto &b : blocks_) {
        if (b.row == w && b.col == w) {
            b.quantum += quantum;
            return;
        }
    }
    blocks_.push_back(CqBlock{w, w, quantum});
}

void ClassicalQuantumState::add_coherence(const CommitWords &row, const CommitWords &col, const Matrix &quantum) {
    check(row, quantum);
    check(col, quantum);
    blocks_.push_back(CqBlock{row, col, quantum});
}

double ClassicalQuantumState::trace() const {
    double t = 0.0;
    for (const auto &b : blocks_) {
        if (b.row == b.col) {
            t += b.quantum.trace().real();
        }
    }
    return t;
}

double ClassicalQuantumState::non_classical_weight() const {
    double w = 0.0;
    for (const auto &b : blocks_) {
        if (b.row != b.col) {
            w += b.quantum.norm();
        }
    }
    return w;
}

DensityMatrix ClassicalQuantumState::quantum_marginal() const {
    Eigen::Index dim = Eigen::Index{1} << (n_a_ + n_b_);
    Matrix acc = Matrix::Zero(dim, dim);
    for (const auto &b : blocks_) {
        if (b.row == b.col) {
            acc += b.quantum;
        }
    }
    return DensityMatrix(n_a_, n_b_, acc);
}

Bits ClassicalQuantumState::word_bits(const CommitWords &w) {
    Bits out;
    for (auto word : w) {
        Bits b = bits_from_uint(word, kCommitWordBits);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

ClassicalQuantumState nisbq_apply(int n, const DensityMatrix &rho, NisbqMode mode, std::uint64_t seed) {
    if (rho.n_b() != n) {
        throw DimensionError("nisbq_apply: B side has " + std::to_string(rho.n_b()) + " qubits, expected " +
                             std::to_string(n));
    }
    if (mode == NisbqMode::Exact && n > kMaxNisbqExactQubits) {
        throw ResourceError("exact NISBQ mixing is limited to " + std::to_string(kMaxNisbqExactQubits) + " qubits");
    }
    std::mt19937_64 rng(seed);
    ClassicalQuantumState out(rho.n_a(), rho.n_b(), 2 * n);
    auto emit = [&](std::uint64_t pad, double weight) {
        Bits a = bits_from_uint(pad >> n, n);
        Bits b = bits_from_uint(pad & ((std::uint64_t{1} << n) - 1), n);
        CommitWords words;
        for (int i = 0; i < n; i++) {
            words.push_back(commit_bit(a[i], static_cast<std::uint16_t>(rng() & 0x7FFF)).value);
        }
        for (int i = 0; i < n; i++) {
            words.push_back(commit_bit(b[i], static_cast<std::uint16_t>(rng() & 0x7FFF)).value);
        }
        out.add(words, weight * pauli_pad(rho, Side::B, a, b).matrix());
    };
    std::uint64_t pads = std::uint64_t{1} << (2 * n);
    if (mode == NisbqMode::Exact) {
        for (std::uint64_t pad = 0; pad < pads; pad++) {
            emit(pad, 1.0 / static_cast<double>(pads));
        }
    } else {
        emit(rng() & (pads - 1), 1.0);
    }
    return out;
}

DensityMatrix nisbq_invert(const ClassicalQuantumState &state) {
    double bad = state.non_classical_weight();
    if (bad > kInvariantTol) {
        throw std::invalid_argument("commitment register is not classical (off-diagonal weight " +
                                    std::to_string(bad) + ")");
    }
    int n = state.words() / 2;
    if (state.n_b() != n || state.words() != 2 * n) {
        throw DimensionError("nisbq_invert: word count does not match the padded register");
    }
    Eigen::Index dim = Eigen::Index{1} << (state.n_a() + state.n_b());
    Matrix acc = Matrix::Zero(dim, dim);
    for (const auto &blk : state.blocks()) {
        if (blk.row != blk.col) {
            continue;
        }
        Bits a(n), b(n);
        for (int i = 0; i < n; i++) {
            a[i] = static_cast<std::uint8_t>(extract_bit(blk.row[i]));
            b[i] = static_cast<std::uint8_t>(extract_bit(blk.row[n + i]));
        }
        double w = blk.quantum.trace().real();
        if (w <= 0.0) {
            continue;
        }
        DensityMatrix part(state.n_a(), state.n_b(), blk.quantum / w);
        acc += w * pauli_pad(part, Side::B, a, b).matrix();
    }
    acc /= acc.trace().real();
    return DensityMatrix(state.n_a(), state.n_b(), (acc + acc.adjoint()) / 2.0);
}

}  // namespace entlab
