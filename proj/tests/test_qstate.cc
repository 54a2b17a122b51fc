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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "entlab/errors.h"
#include "entlab/state.h"
#include "entlab/state_io.h"
#include "test_util.h"

using namespace entlab;
using entlab_test::brute_reduce_to_a;
using entlab_test::brute_reduce_to_b;
using entlab_test::hermitian_spectrum;

namespace {

PureState from_matrix(const Matrix &amp_matrix, int n_a, int n_b) {
    // Row index on A, column index on B.
    Vector v(amp_matrix.size());
    for (long i = 0; i < amp_matrix.rows(); i++) {
        for (long j = 0; j < amp_matrix.cols(); j++) {
            v(i * amp_matrix.cols() + j) = amp_matrix(i, j);
        }
    }
    return PureState::normalized(n_a, n_b, v);
}

// (I (x) U) Phi^n written out directly: sum_i |i> U|i> / sqrt(d).
PureState rotated_epr(const Matrix &u, int n) {
    long d = u.rows();
    Vector v = Vector::Zero(d * d);
    for (long i = 0; i < d; i++) {
        for (long j = 0; j < d; j++) {
            v(i * d + j) = u(j, i) / std::sqrt(static_cast<double>(d));
        }
    }
    return PureState(n, n, v);
}

}  // namespace

TEST(EprPairs, ZeroPairsIsScalar) {
    PureState s = epr_pairs(0);
    ASSERT_EQ(s.amplitudes().size(), 1);
    EXPECT_NEAR(std::abs(s.amplitudes()(0) - Complex(1.0)), 0.0, 1e-15);
}

TEST(EprPairs, OnePair) {
    PureState s = epr_pairs(1);
    EXPECT_EQ(s.n_a(), 1);
    EXPECT_EQ(s.n_b(), 1);
    double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(s.amplitudes()(0) - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitudes()(1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitudes()(2)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitudes()(3) - r), 0.0, 1e-15);
}

TEST(EprPairs, TwoPairsSupport) {
    PureState s = epr_pairs(2);
    for (long i = 0; i < 16; i++) {
        double expect = (i == 0b0000 || i == 0b0101 || i == 0b1010 || i == 0b1111) ? 0.5 : 0.0;
        EXPECT_NEAR(std::abs(s.amplitudes()(i) - expect), 0.0, 1e-15) << i;
    }
}

TEST(Tensor, ProductOfBasisStates) {
    PureState a = PureState::basis(1, 0, 0);
    PureState b = PureState::basis(0, 1, 1);
    PureState t = tensor(a, b);
    EXPECT_EQ(t.n_a(), 1);
    EXPECT_EQ(t.n_b(), 1);
    EXPECT_NEAR(std::abs(t.amplitudes()(1) - Complex(1.0)), 0.0, 1e-15);
}

TEST(Tensor, EprPairsCompose) {
    PureState t = tensor(epr_pairs(1), epr_pairs(1));
    EXPECT_NEAR((t.amplitudes() - epr_pairs(2).amplitudes()).norm(), 0.0, 1e-14);
}

TEST(Tensor, NormIsMultiplicative) {
    std::mt19937_64 rng(3);
    PureState t = tensor(random_pure_state(2, 1, rng), random_pure_state(1, 2, rng));
    EXPECT_NEAR(t.amplitudes().norm(), 1.0, 1e-12);
    EXPECT_EQ(t.n_a(), 3);
    EXPECT_EQ(t.n_b(), 3);
}

TEST(Tensor, DensityMatchesPure) {
    std::mt19937_64 rng(4);
    PureState s1 = random_pure_state(1, 1, rng);
    PureState s2 = random_pure_state(1, 0, rng);
    DensityMatrix d = tensor(DensityMatrix::from_pure(s1), DensityMatrix::from_pure(s2));
    DensityMatrix e = DensityMatrix::from_pure(tensor(s1, s2));
    EXPECT_NEAR((d.matrix() - e.matrix()).norm(), 0.0, 1e-12);
}

TEST(Budget, PureAndDensityLimits) {
    EXPECT_THROW(PureState::basis(13, 12, 0), ResourceError);
    EXPECT_THROW(DensityMatrix::maximally_mixed(7, 6), ResourceError);
    EXPECT_NO_THROW(DensityMatrix::maximally_mixed(1, 1));
}

TEST(Validation, RejectsBadInputs) {
    EXPECT_THROW(PureState(1, 1, Vector::Ones(4)), DimensionError);
    EXPECT_THROW(PureState(1, 1, Vector::Zero(3)), DimensionError);
    Matrix m = Matrix::Identity(4, 4);
    EXPECT_THROW(DensityMatrix(1, 1, m), DimensionError);
    m(0, 1) = Complex(0.1, 0.0);
    m /= 4.0;
    EXPECT_THROW(DensityMatrix(1, 1, m), DimensionError);
}

TEST(PartialTrace, EprMarginalIsMaximallyMixed) {
    DensityMatrix r = partial_trace(epr_pairs(1), Side::A);
    EXPECT_NEAR((r.matrix() - Matrix::Identity(2, 2) / 2.0).norm(), 0.0, 1e-15);
}

TEST(PartialTrace, ProductState) {
    Vector v(4);
    double r = 1.0 / std::sqrt(2.0);
    v << r, r, 0, 0;  // |0>_A |+>_B
    DensityMatrix ra = partial_trace(PureState(1, 1, v), Side::A);
    Matrix expect = Matrix::Zero(2, 2);
    expect(0, 0) = 1.0;
    EXPECT_NEAR((ra.matrix() - expect).norm(), 0.0, 1e-15);
}

TEST(PartialTrace, AgreesWithIndexLoops) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; trial++) {
        int na = 1 + static_cast<int>(rng() % 3);
        int nb = 1 + static_cast<int>(rng() % 3);
        PureState s = random_pure_state(na, nb, rng);
        EXPECT_NEAR((partial_trace(s, Side::A).matrix() - brute_reduce_to_a(s.amplitudes(), na, nb)).norm(), 0.0,
                    1e-12);
        EXPECT_NEAR((partial_trace(s, Side::B).matrix() - brute_reduce_to_b(s.amplitudes(), na, nb)).norm(), 0.0,
                    1e-12);
        DensityMatrix rho = DensityMatrix::from_pure(s);
        EXPECT_NEAR((partial_trace(rho, Side::B).matrix() - brute_reduce_to_b(s.amplitudes(), na, nb)).norm(), 0.0,
                    1e-12);
    }
}

TEST(Schmidt, BellAndProduct) {
    auto bell = schmidt_decompose(epr_pairs(1)).coefficients;
    EXPECT_NEAR(bell(0), 0.5, 1e-12);
    EXPECT_NEAR(bell(1), 0.5, 1e-12);
    auto prod = schmidt_decompose(PureState::basis(2, 2, 5)).coefficients;
    EXPECT_NEAR(prod(0), 1.0, 1e-12);
    for (long i = 1; i < prod.size(); i++) {
        EXPECT_NEAR(prod(i), 0.0, 1e-12);
    }
}

TEST(Schmidt, DiagonalAmplitudeMatrix) {
    Matrix a = Matrix::Zero(4, 4);
    a(0, 0) = std::sqrt(0.5);
    a(1, 1) = std::sqrt(0.3);
    a(2, 2) = std::sqrt(0.2);
    auto c = schmidt_decompose(from_matrix(a, 2, 2));
    EXPECT_NEAR(c.coefficients(0), 0.5, 1e-12);
    EXPECT_NEAR(c.coefficients(1), 0.3, 1e-12);
    EXPECT_NEAR(c.coefficients(2), 0.2, 1e-12);
    EXPECT_EQ(c.rank(), 3);
}

TEST(Schmidt, MatchesReducedSpectrumAndReconstructs) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; trial++) {
        int na = 1 + static_cast<int>(rng() % 3);
        int nb = 1 + static_cast<int>(rng() % 3);
        PureState s = random_pure_state(na, nb, rng);
        auto sd = schmidt_decompose(s);
        auto spec = hermitian_spectrum(brute_reduce_to_a(s.amplitudes(), na, nb));
        for (long i = 0; i < sd.coefficients.size(); i++) {
            EXPECT_NEAR(sd.coefficients(i), spec[static_cast<size_t>(i)], 1e-10);
        }
        PureState back = sd.reconstruct(na, nb);
        EXPECT_NEAR((back.amplitudes() - s.amplitudes()).norm(), 0.0, kReconstructionTol);
    }
}

TEST(Entropy, VonNeumannBasics) {
    std::mt19937_64 rng(6);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::from_pure(random_pure_state(2, 1, rng))), 0.0, 1e-9);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(2, 1)), 3.0, 1e-9);
    Matrix d = Matrix::Zero(4, 4);
    d(0, 0) = 0.5;
    d(1, 1) = 0.25;
    d(2, 2) = 0.25;
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(1, 1, d)), 1.5, 1e-12);
}

TEST(Entropy, PureMarginalsAgree) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; trial++) {
        PureState s = random_pure_state(1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3), rng);
        EXPECT_NEAR(von_neumann_entropy(partial_trace(s, Side::A)), von_neumann_entropy(partial_trace(s, Side::B)),
                    1e-9);
    }
}

TEST(Fidelity, Basics) {
    EXPECT_NEAR(fidelity_with_pure(epr_pairs(2), epr_pairs(2)), 1.0, 1e-12);
    EXPECT_NEAR(fidelity_with_pure(DensityMatrix::maximally_mixed(1, 1), epr_pairs(1)), 0.25, 1e-12);
}

TEST(Fidelity, ProductStatesBoundedByInverseDimension) {
    // |sum_i a_i b_i|^2 / 2^m <= 2^-m by Cauchy-Schwarz; the best product hits it.
    std::mt19937_64 rng(8);
    for (int m = 1; m <= 2; m++) {
        double best = 0;
        for (int trial = 0; trial < 2000; trial++) {
            PureState a = random_pure_state(m, 0, rng);
            PureState b = random_pure_state(0, m, rng);
            best = std::max(best, fidelity_with_pure(tensor(a, b), epr_pairs(m)));
        }
        EXPECT_LE(best, std::pow(2.0, -m) + 1e-12);
        PureState zero = tensor(PureState::basis(m, 0, 0), PureState::basis(0, m, 0));
        EXPECT_NEAR(fidelity_with_pure(zero, epr_pairs(m)), std::pow(2.0, -m), 1e-12);
    }
}

TEST(Fidelity, RangeAndEqualityOnRandomInstances) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; trial++) {
        PureState t = random_pure_state(1, 2, rng);
        PureState s = random_pure_state(1, 2, rng);
        double f = fidelity_with_pure(DensityMatrix::from_pure(s), t);
        EXPECT_GE(f, -1e-12);
        EXPECT_LE(f, 1.0 + 1e-12);
        EXPECT_NEAR(fidelity_with_pure(DensityMatrix::from_pure(t), t), 1.0, 1e-8);
    }
}

TEST(Fidelity, RotatedEprOverlapFormula) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 50; trial++) {
        Matrix u = haar_unitary(2, rng);
        Matrix v = haar_unitary(2, rng);
        EXPECT_NEAR((u.adjoint() * u - Matrix::Identity(2, 2)).norm(), 0.0, 1e-12);
        PureState pu = rotated_epr(u, 1);
        PureState pv = rotated_epr(v, 1);
        double re = pu.amplitudes().dot(pv.amplitudes()).real();  // dot conjugates the left side
        EXPECT_NEAR(re, 1.0 - (u - v).squaredNorm() / 4.0, 1e-9);
        EXPECT_NEAR(fidelity_with_pure(pu, pv), std::norm((u.adjoint() * v).trace()) / 4.0, 1e-9);
    }
}

TEST(PauliPad, ZeroPadIsIdentity) {
    std::mt19937_64 rng(12);
    PureState s = random_pure_state(2, 2, rng);
    PureState t = pauli_pad(s, Side::B, Bits{0, 0}, Bits{0, 0});
    EXPECT_NEAR((s.amplitudes() - t.amplitudes()).norm(), 0.0, 1e-15);
}

TEST(PauliPad, XOnFirstQubitOfA) {
    PureState s = pauli_pad(PureState::basis(1, 1, 0), Side::A, Bits{1}, Bits{0});
    EXPECT_NEAR(std::abs(s.amplitudes()(2) - Complex(1.0)), 0.0, 1e-15);
}

TEST(PauliPad, TwirlGivesMaximallyMixedMarginal) {
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 2; n++) {
        PureState s = random_pure_state(1, n, rng);
        Matrix acc = Matrix::Zero(1 << n, 1 << n);
        for (std::uint64_t a = 0; a < (1u << n); a++) {
            for (std::uint64_t b = 0; b < (1u << n); b++) {
                PureState t = pauli_pad(s, Side::B, bits_from_uint(a, n), bits_from_uint(b, n));
                acc += brute_reduce_to_b(t.amplitudes(), 1, n);
            }
        }
        acc /= static_cast<double>(1 << (2 * n));
        EXPECT_NEAR((acc - Matrix::Identity(1 << n, 1 << n) / static_cast<double>(1 << n)).norm(), 0.0, 1e-12);
    }
}

TEST(PauliPad, InvolutionUpToPhase) {
    std::mt19937_64 rng(14);
    PureState s = random_pure_state(2, 2, rng);
    Bits a{1, 0}, b{1, 1};
    PureState t = pauli_pad(pauli_pad(s, Side::A, a, b), Side::A, a, b);
    EXPECT_NEAR(fidelity_with_pure(t, s), 1.0, 1e-12);
    DensityMatrix rho = DensityMatrix::from_pure(s);
    DensityMatrix back = pauli_pad(pauli_pad(rho, Side::B, a, b), Side::B, a, b);
    EXPECT_NEAR((back.matrix() - rho.matrix()).norm(), 0.0, 1e-12);
}

TEST(PauliPad, LengthMismatch) {
    EXPECT_THROW(pauli_pad(epr_pairs(1), Side::A, Bits{0, 0}, Bits{0}), DimensionError);
}

TEST(StateIo, RoundTripPureAndDensity) {
    std::mt19937_64 rng(15);
    PureState s = random_pure_state(2, 1, rng);
    std::string bytes = serialize_state(s);
    EXPECT_EQ(bytes.size(), 16u + 16u * 8u);
    EXPECT_EQ(bytes.substr(0, 4), "QST1");
    AnyState back = deserialize_state(bytes);
    ASSERT_TRUE(std::holds_alternative<PureState>(back));
    EXPECT_EQ((std::get<PureState>(back).amplitudes() - s.amplitudes()).norm(), 0.0);

    DensityMatrix d = DensityMatrix::maximally_mixed(1, 1);
    AnyState back_d = deserialize_state(serialize_state(d));
    ASSERT_TRUE(std::holds_alternative<DensityMatrix>(back_d));
    EXPECT_EQ((std::get<DensityMatrix>(back_d).matrix() - d.matrix()).norm(), 0.0);
    EXPECT_THROW(deserialize_state(bytes.substr(0, 20)), DimensionError);
}

TEST(Bits, Conversions) {
    EXPECT_EQ(bits_to_string(bits_from_uint(5, 4)), "0101");
    EXPECT_EQ(bits_to_uint(bits_from_string("1101")), 13u);
    EXPECT_EQ(bits_to_hex(bits_from_uint(0x5a, 8)), "5a");
    EXPECT_EQ(bits_from_hex("5a", 8), bits_from_uint(0x5a, 8));
    auto enc = encode_for_hash(bits_from_string("101"));
    ASSERT_EQ(enc.size(), 9u);
    EXPECT_EQ(enc[7], 3);
    EXPECT_EQ(enc[8], 0xA0);
}
