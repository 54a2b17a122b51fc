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

#ifndef ENTLAB_STATE_H
#define ENTLAB_STATE_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <variant>

#include "entlab/bits.h"

namespace entlab {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr int kMaxPureQubits = 24;
inline constexpr int kMaxDensityQubits = 12;

// Tolerance ladder.
inline constexpr double kEigenFloor = 1e-12;
inline constexpr double kInvariantTol = 1e-9;
inline constexpr double kReconstructionTol = 1e-8;

enum class Side { A, B };

const char *side_name(Side side);

/// Bipartite pure state. Amplitude index: A-qubits are the high-order bits, B-qubits the
/// low-order bits; within each side qubit 0 is the most significant. Global qubit q
/// (A qubits first, then B) is bit (n_a + n_b - 1 - q) of the index.
class PureState {
   public:
    PureState(int n_a, int n_b, Vector amplitudes);

    /// Computational basis state |index>.
    static PureState basis(int n_a, int n_b, std::uint64_t index);
    /// Rescales to unit norm; fails on a zero vector.
    static PureState normalized(int n_a, int n_b, Vector amplitudes);

    int n_a() const { return n_a_; }
    int n_b() const { return n_b_; }
    int num_qubits() const { return n_a_ + n_b_; }
    const Vector &amplitudes() const { return amplitudes_; }

    /// Reshape into the 2^n_a x 2^n_b matrix M with M(a, b) = amplitude(a * 2^n_b + b).
    Matrix amplitude_matrix() const;

   private:
    int n_a_;
    int n_b_;
    Vector amplitudes_;
};

class DensityMatrix {
   public:
    /// Checks shape, hermiticity and unit trace. Positivity is checked by is_positive().
    DensityMatrix(int n_a, int n_b, Matrix matrix);

    static DensityMatrix from_pure(const PureState &state);
    static DensityMatrix maximally_mixed(int n_a, int n_b);

    int n_a() const { return n_a_; }
    int n_b() const { return n_b_; }
    int num_qubits() const { return n_a_ + n_b_; }
    const Matrix &matrix() const { return matrix_; }

    bool is_positive(double tol = kInvariantTol) const;

   private:
    int n_a_;
    int n_b_;
    Matrix matrix_;
};

using AnyState = std::variant<PureState, DensityMatrix>;

int num_qubits(const AnyState &state);
int side_qubits(const AnyState &state, Side side);
DensityMatrix to_density(const AnyState &state);

struct SchmidtDecomposition {
    RealVector coefficients;  // squared singular values, sorted descending
    Matrix left_basis;        // columns are |u_i> on A
    Matrix right_basis;       // columns are |v_i> on B

    int rank(double floor = 1e-10) const;
    PureState reconstruct(int n_a, int n_b) const;
};

PureState epr_pairs(int m);
/// Tensor product with A parts concatenated (s1's first) and B parts concatenated.
PureState tensor(const PureState &s1, const PureState &s2);
DensityMatrix tensor(const DensityMatrix &r1, const DensityMatrix &r2);

DensityMatrix partial_trace(const PureState &state, Side keep);
DensityMatrix partial_trace(const DensityMatrix &rho, Side keep);
DensityMatrix partial_trace(const AnyState &state, Side keep);

SchmidtDecomposition schmidt_decompose(const PureState &state);

/// <target| rho |target> (squared-overlap convention).
double fidelity_with_pure(const PureState &state, const PureState &target);
double fidelity_with_pure(const DensityMatrix &rho, const PureState &target);
double fidelity_with_pure(const AnyState &state, const PureState &target);

/// Entropy in bits of a probability vector; entries below kEigenFloor count as zero.
double shannon_entropy(const RealVector &probabilities);
RealVector eigenvalues(const DensityMatrix &rho);
double von_neumann_entropy(const DensityMatrix &rho);

/// Applies sigma_X(a) sigma_Z(b) on the chosen side (Z first, then X).
PureState pauli_pad(const PureState &state, Side side, const Bits &a, const Bits &b);
DensityMatrix pauli_pad(const DensityMatrix &rho, Side side, const Bits &a, const Bits &b);

/// Haar-random unitary via QR of a complex Ginibre matrix with phase correction.
Matrix haar_unitary(int dim, std::mt19937_64 &rng);
/// Haar-random pure state on the given partition.
PureState random_pure_state(int n_a, int n_b, std::mt19937_64 &rng);

/// Uniform double in [0, 1) from the top 53 bits of one draw; stable across standard libraries.
inline double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace entlab

#endif
