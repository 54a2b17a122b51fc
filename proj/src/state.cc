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

#include "entlab/state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "entlab/errors.h"

namespace entlab {

namespace {

void check_pure_budget(int n) {
    if (n > kMaxPureQubits) {
        throw ResourceError("pure state of " + std::to_string(n) + " qubits exceeds budget of " +
                            std::to_string(kMaxPureQubits));
    }
}

void check_density_budget(int n) {
    if (n > kMaxDensityQubits) {
        throw ResourceError("density matrix of " + std::to_string(n) + " qubits exceeds budget of " +
                            std::to_string(kMaxDensityQubits));
    }
}

void check_counts(int n_a, int n_b) {
    if (n_a < 0 || n_b < 0) {
        throw DimensionError("qubit counts must be non-negative");
    }
}

// Bitmask over the full index for a side-local bitstring.
std::uint64_t side_mask(int n_a, int n_b, Side side, const Bits &bits) {
    int n = side == Side::A ? n_a : n_b;
    if (static_cast<int>(bits.size()) != n) {
        throw DimensionError("pad length " + std::to_string(bits.size()) + " does not match side width " +
                             std::to_string(n));
    }
    int offset = side == Side::A ? n_b : 0;
    std::uint64_t mask = 0;
    for (int j = 0; j < n; j++) {
        if (bits[j]) {
            mask |= std::uint64_t{1} << (offset + n - 1 - j);
        }
    }
    return mask;
}

double parity_sign(std::uint64_t x) {
    return (std::popcount(x) & 1) ? -1.0 : 1.0;
}

}  // namespace

const char *side_name(Side side) {
    return side == Side::A ? "A" : "B";
}

PureState::PureState(int n_a, int n_b, Vector amplitudes) : n_a_(n_a), n_b_(n_b), amplitudes_(std::move(amplitudes)) {
    check_counts(n_a, n_b);
    check_pure_budget(n_a + n_b);
    if (amplitudes_.size() != (Eigen::Index{1} << (n_a + n_b))) {
        throw DimensionError("amplitude vector length " + std::to_string(amplitudes_.size()) +
                             " does not match 2^" + std::to_string(n_a + n_b));
    }
    double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > kInvariantTol) {
        throw DimensionError("state is not normalized (norm " + std::to_string(norm) + ")");
    }
}

PureState PureState::basis(int n_a, int n_b, std::uint64_t index) {
    check_counts(n_a, n_b);
    check_pure_budget(n_a + n_b);
    Vector v = Vector::Zero(Eigen::Index{1} << (n_a + n_b));
    if (index >= static_cast<std::uint64_t>(v.size())) {
        throw DimensionError("basis index out of range");
    }
    v(index) = 1.0;
    return PureState(n_a, n_b, std::move(v));
}

PureState PureState::normalized(int n_a, int n_b, Vector amplitudes) {
    double norm = amplitudes.norm();
    if (norm == 0.0) {
        throw DimensionError("cannot normalize the zero vector");
    }
    amplitudes /= norm;
    return PureState(n_a, n_b, std::move(amplitudes));
}

Matrix PureState::amplitude_matrix() const {
    Eigen::Index rows = Eigen::Index{1} << n_a_;
    Eigen::Index cols = Eigen::Index{1} << n_b_;
    Matrix m(rows, cols);
    for (Eigen::Index a = 0; a < rows; a++) {
        for (Eigen::Index b = 0; b < cols; b++) {
            m(a, b) = amplitudes_(a * cols + b);
        }
    }
    return m;
}

DensityMatrix::DensityMatrix(int n_a, int n_b, Matrix matrix) : n_a_(n_a), n_b_(n_b), matrix_(std::move(matrix)) {
    check_counts(n_a, n_b);
    check_density_budget(n_a + n_b);
    Eigen::Index dim = Eigen::Index{1} << (n_a + n_b);
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        throw DimensionError("density matrix shape does not match 2^" + std::to_string(n_a + n_b));
    }
    double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kInvariantTol) {
        throw DimensionError("density matrix is not Hermitian");
    }
    double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > kInvariantTol) {
        throw DimensionError("density matrix trace is " + std::to_string(tr));
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState &state) {
    const Vector &v = state.amplitudes();
    return DensityMatrix(state.n_a(), state.n_b(), v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_a, int n_b) {
    check_density_budget(n_a + n_b);
    Eigen::Index dim = Eigen::Index{1} << (n_a + n_b);
    return DensityMatrix(n_a, n_b, Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

bool DensityMatrix::is_positive(double tol) const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -tol;
}

int num_qubits(const AnyState &state) {
    return std::visit([](const auto &s) { return s.num_qubits(); }, state);
}

int side_qubits(const AnyState &state, Side side) {
    return std::visit([side](const auto &s) { return side == Side::A ? s.n_a() : s.n_b(); }, state);
}

DensityMatrix to_density(const AnyState &state) {
    if (const auto *p = std::get_if<PureState>(&state)) {
        return DensityMatrix::from_pure(*p);
    }
    return std::get<DensityMatrix>(state);
}

int SchmidtDecomposition::rank(double floor) const {
    int r = 0;
    for (Eigen::Index i = 0; i < coefficients.size(); i++) {
        if (coefficients(i) > floor) {
            r++;
        }
    }
    return r;
}

PureState SchmidtDecomposition::reconstruct(int n_a, int n_b) const {
    Eigen::Index dim_b = Eigen::Index{1} << n_b;
    Vector v = Vector::Zero(left_basis.rows() * dim_b);
    for (Eigen::Index i = 0; i < coefficients.size(); i++) {
        double w = std::sqrt(std::max(0.0, coefficients(i)));
        if (w == 0.0) {
            continue;
        }
        for (Eigen::Index a = 0; a < left_basis.rows(); a++) {
            v.segment(a * dim_b, dim_b) += w * left_basis(a, i) * right_basis.col(i);
        }
    }
    return PureState::normalized(n_a, n_b, std::move(v));
}

PureState epr_pairs(int m) {
    if (m < 0) {
        throw DimensionError("EPR pair count must be non-negative");
    }
    check_pure_budget(2 * m);
    Eigen::Index dim = Eigen::Index{1} << m;
    Vector v = Vector::Zero(dim * dim);
    double amp = std::pow(2.0, -0.5 * m);
    for (Eigen::Index x = 0; x < dim; x++) {
        v(x * dim + x) = amp;
    }
    return PureState(m, m, std::move(v));
}

PureState tensor(const PureState &s1, const PureState &s2) {
    int n_a = s1.n_a() + s2.n_a();
    int n_b = s1.n_b() + s2.n_b();
    check_pure_budget(n_a + n_b);
    Eigen::Index da1 = Eigen::Index{1} << s1.n_a(), db1 = Eigen::Index{1} << s1.n_b();
    Eigen::Index da2 = Eigen::Index{1} << s2.n_a(), db2 = Eigen::Index{1} << s2.n_b();
    Vector v(da1 * da2 * db1 * db2);
    const Vector &x = s1.amplitudes();
    const Vector &y = s2.amplitudes();
    for (Eigen::Index a1 = 0; a1 < da1; a1++) {
        for (Eigen::Index a2 = 0; a2 < da2; a2++) {
            for (Eigen::Index b1 = 0; b1 < db1; b1++) {
                for (Eigen::Index b2 = 0; b2 < db2; b2++) {
                    Eigen::Index idx = (a1 * da2 + a2) * (db1 * db2) + b1 * db2 + b2;
                    v(idx) = x(a1 * db1 + b1) * y(a2 * db2 + b2);
                }
            }
        }
    }
    return PureState(n_a, n_b, std::move(v));
}

DensityMatrix tensor(const DensityMatrix &r1, const DensityMatrix &r2) {
    int n_a = r1.n_a() + r2.n_a();
    int n_b = r1.n_b() + r2.n_b();
    check_density_budget(n_a + n_b);
    Eigen::Index da1 = Eigen::Index{1} << r1.n_a(), db1 = Eigen::Index{1} << r1.n_b();
    Eigen::Index da2 = Eigen::Index{1} << r2.n_a(), db2 = Eigen::Index{1} << r2.n_b();
    auto index = [&](Eigen::Index i1, Eigen::Index i2) {
        Eigen::Index a1 = i1 / db1, b1 = i1 % db1, a2 = i2 / db2, b2 = i2 % db2;
        return (a1 * da2 + a2) * (db1 * db2) + b1 * db2 + b2;
    };
    Eigen::Index d1 = da1 * db1, d2 = da2 * db2;
    Matrix m(d1 * d2, d1 * d2);
    for (Eigen::Index i1 = 0; i1 < d1; i1++) {
        for (Eigen::Index i2 = 0; i2 < d2; i2++) {
            Eigen::Index row = index(i1, i2);
            for (Eigen::Index j1 = 0; j1 < d1; j1++) {
                for (Eigen::Index j2 = 0; j2 < d2; j2++) {
                    m(row, index(j1, j2)) = r1.matrix()(i1, j1) * r2.matrix()(i2, j2);
                }
            }
        }
    }
    return DensityMatrix(n_a, n_b, std::move(m));
}

DensityMatrix partial_trace(const PureState &state, Side keep) {
    Matrix m = state.amplitude_matrix();
    if (keep == Side::A) {
        return DensityMatrix(state.n_a(), 0, m * m.adjoint());
    }
    return DensityMatrix(0, state.n_b(), m.transpose() * m.conjugate());
}

DensityMatrix partial_trace(const DensityMatrix &rho, Side keep) {
    Eigen::Index da = Eigen::Index{1} << rho.n_a();
    Eigen::Index db = Eigen::Index{1} << rho.n_b();
    const Matrix &r = rho.matrix();
    if (keep == Side::A) {
        Matrix out = Matrix::Zero(da, da);
        for (Eigen::Index i = 0; i < da; i++) {
            for (Eigen::Index j = 0; j < da; j++) {
                Complex s = 0;
                for (Eigen::Index k = 0; k < db; k++) {
                    s += r(i * db + k, j * db + k);
                }
                out(i, j) = s;
            }
        }
        return DensityMatrix(rho.n_a(), 0, std::move(out));
    }
    Matrix out = Matrix::Zero(db, db);
    for (Eigen::Index i = 0; i < db; i++) {
        for (Eigen::Index j = 0; j < db; j++) {
            Complex s = 0;
            for (Eigen::Index k = 0; k < da; k++) {
                s += r(k * db + i, k * db + j);
            }
            out(i, j) = s;
        }
    }
    return DensityMatrix(0, rho.n_b(), std::move(out));
}

DensityMatrix partial_trace(const AnyState &state, Side keep) {
    return std::visit([keep](const auto &s) { return partial_trace(s, keep); }, state);
}

SchmidtDecomposition schmidt_decompose(const PureState &state) {
    Matrix m = state.amplitude_matrix();
    // Both SVD flavours return singular values in decreasing order.
    auto fill = [](const auto &svd) {
        SchmidtDecomposition out;
        out.coefficients = svd.singularValues().array().square();
        out.left_basis = svd.matrixU();
        out.right_basis = svd.matrixV().conjugate();
        return out;
    };
    if (std::min(m.rows(), m.cols()) <= 64) {
        return fill(Eigen::JacobiSVD<Matrix>(m, Eigen::ComputeThinU | Eigen::ComputeThinV));
    }
    return fill(Eigen::BDCSVD<Matrix>(m, Eigen::ComputeThinU | Eigen::ComputeThinV));
}

double fidelity_with_pure(const PureState &state, const PureState &target) {
    if (state.n_a() != target.n_a() || state.n_b() != target.n_b()) {
        throw DimensionError("fidelity: partition mismatch");
    }
    return std::min(1.0, std::norm(target.amplitudes().dot(state.amplitudes())));
}

double fidelity_with_pure(const DensityMatrix &rho, const PureState &target) {
    if (rho.n_a() != target.n_a() || rho.n_b() != target.n_b()) {
        throw DimensionError("fidelity: partition mismatch");
    }
    const Vector &t = target.amplitudes();
    double f = t.dot(rho.matrix() * t).real();
    return std::clamp(f, 0.0, 1.0);
}

double fidelity_with_pure(const AnyState &state, const PureState &target) {
    return std::visit([&](const auto &s) { return fidelity_with_pure(s, target); }, state);
}

double shannon_entropy(const RealVector &probabilities) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < probabilities.size(); i++) {
        double p = probabilities(i);
        if (p > kEigenFloor) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

RealVector eigenvalues(const DensityMatrix &rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return shannon_entropy(eigenvalues(rho));
}

PureState pauli_pad(const PureState &state, Side side, const Bits &a, const Bits &b) {
    std::uint64_t mx = side_mask(state.n_a(), state.n_b(), side, a);
    std::uint64_t mz = side_mask(state.n_a(), state.n_b(), side, b);
    const Vector &v = state.amplitudes();
    Vector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); i++) {
        auto u = static_cast<std::uint64_t>(i);
        out(static_cast<Eigen::Index>(u ^ mx)) = parity_sign(u & mz) * v(i);
    }
    return PureState(state.n_a(), state.n_b(), std::move(out));
}

DensityMatrix pauli_pad(const DensityMatrix &rho, Side side, const Bits &a, const Bits &b) {
    std::uint64_t mx = side_mask(rho.n_a(), rho.n_b(), side, a);
    std::uint64_t mz = side_mask(rho.n_a(), rho.n_b(), side, b);
    const Matrix &r = rho.matrix();
    Matrix out(r.rows(), r.cols());
    for (Eigen::Index i = 0; i < r.rows(); i++) {
        auto ui = static_cast<std::uint64_t>(i);
        double si = parity_sign(ui & mz);
        for (Eigen::Index j = 0; j < r.cols(); j++) {
            auto uj = static_cast<std::uint64_t>(j);
            out(static_cast<Eigen::Index>(ui ^ mx), static_cast<Eigen::Index>(uj ^ mx)) =
                si * parity_sign(uj & mz) * r(i, j);
        }
    }
    return DensityMatrix(rho.n_a(), rho.n_b(), std::move(out));
}

Matrix haar_unitary(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(dim, dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            double re = normal(rng);
            double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; j++) {
        Complex d = r(j, j);
        double mag = std::abs(d);
        q.col(j) *= mag > 0 ? d / mag : Complex(1.0);
    }
    return q;
}

PureState random_pure_state(int n_a, int n_b, std::mt19937_64 &rng) {
    check_pure_budget(n_a + n_b);
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector v(Eigen::Index{1} << (n_a + n_b));
    for (Eigen::Index i = 0; i < v.size(); i++) {
        double re = normal(rng);
        double im = normal(rng);
        v(i) = Complex(re, im);
    }
    return PureState::normalized(n_a, n_b, std::move(v));
}

}  // namespace entlab
