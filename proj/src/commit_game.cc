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

#include "entlab/commit_game.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "entlab/commitment.h"
#include "entlab/errors.h"
#include "entlab/execute.h"

namespace entlab {

namespace {

struct Component {
    double weight;
    PureState state;
    Bits classical_b;
};

void add_components(std::vector<Component> &out, const Matrix &block, int n_a, int n_b, const Bits &classical_b) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(block);
    for (Eigen::Index i = es.eigenvalues().size() - 1; i >= 0; i--) {
        double w = es.eigenvalues()(i);
        if (w > kEigenFloor) {
            out.push_back(Component{w, PureState::normalized(n_a, n_b, es.eigenvectors().col(i)), classical_b});
        }
    }
}

GameResult play(const LoccProtocol &distiller, const std::vector<Component> &comps, int m, long trials,
                std::uint64_t seed) {
    if (distiller.m_a != m || distiller.m_b != m) {
        throw DimensionError("distiller must output m qubits per side");
    }
    if (trials <= 0) {
        throw std::invalid_argument("distinguisher game needs a positive trial count");
    }
    double total = 0.0;
    for (const auto &c : comps) {
        total += c.weight;
    }
    PureState target = epr_pairs(m);
    std::mt19937_64 rng(seed);
    long accepted = 0;
    for (long t = 0; t < trials; t++) {
        double u = uniform01(rng) * total;
        size_t pick = comps.size() - 1;
        for (size_t i = 0; i < comps.size(); i++) {
            u -= comps[i].weight;
            if (u < 0) {
                pick = i;
                break;
            }
        }
        const Component &c = comps[pick];
        ProtocolInput input(AnyState(c.state), Bits{}, c.classical_b);
        double f = fidelity_with_pure(execute_sampled(distiller, input, rng()).output, target);
        if (uniform01(rng) < f) {
            accepted++;
        }
    }
    GameResult r;
    r.trials = trials;
    r.acceptance = static_cast<double>(accepted) / static_cast<double>(trials);
    r.std_error = std::sqrt(r.acceptance * (1.0 - r.acceptance) / static_cast<double>(trials));
    return r;
}

}  // namespace

CommitPair make_commit_pair(int lambda, int n) {
    if (n < 1 || n > kMaxNisbqExactQubits) {
        throw ResourceError("commit pair supports 1.." + std::to_string(kMaxNisbqExactQubits) + " qubits per side");
    }
    auto seed = static_cast<std::uint64_t>(lambda);
    DensityMatrix epr = DensityMatrix::from_pure(epr_pairs(n));
    Eigen::Index d = Eigen::Index{1} << n;
    Matrix zero = Matrix::Zero(d, d);
    zero(0, 0) = 1.0;
    DensityMatrix product = tensor(DensityMatrix::maximally_mixed(n, 0), DensityMatrix(0, n, zero));
    return CommitPair{nisbq_apply(n, epr, NisbqMode::Exact, seed), nisbq_apply(n, product, NisbqMode::Exact, seed)};
}

LoccProtocol commit_distiller_protocol(int n) {
    if (n < 1) {
        throw std::invalid_argument("distiller needs n >= 1");
    }
    auto reg = std::make_shared<OracleRegistry>();
    OracleEntry open;
    open.role = OracleRole::Other;
    open.width = kCommitWordBits;
    open.apply = [](std::uint64_t v) { return static_cast<std::uint64_t>(open_commitment(static_cast<std::uint16_t>(v))); };
    reg->add("COMMIT_INV", std::move(open));
    int words = 2 * n;
    LoccProtocol p = LoccProtocol::empty(n, n + words * kCommitWordBits, 0, 0, 0, n, n);
    p.oracles = reg;
    LocalCircuit &b = p.rounds[0].b;
    auto word_base = [&](int w) { return n + w * kCommitWordBits; };
    for (int w = 0; w < words; w++) {
        std::vector<int> qs;
        for (int k = 0; k < kCommitWordBits; k++) {
            qs.push_back(word_base(w) + k);
        }
        b.add(Gate::oracle_call("COMMIT_INV", qs));
    }
    for (int i = 0; i < n; i++) {
        b.add(Gate::cnot(word_base(i) + kCommitWordBits - 1, i));
    }
    for (int i = 0; i < n; i++) {
        b.add(Gate::h(i));
        b.add(Gate::cnot(word_base(n + i) + kCommitWordBits - 1, i));
        b.add(Gate::h(i));
    }
    return p;
}

GameResult distinguisher_game(const LoccProtocol &distiller, const ClassicalQuantumState &state, int m, long trials,
                              std::uint64_t seed) {
    if (state.non_classical_weight() > kInvariantTol) {
        throw std::invalid_argument("distinguisher game needs a classical word register");
    }
    std::vector<Component> comps;
    for (const auto &blk : state.blocks()) {
        if (blk.row == blk.col) {
            add_components(comps, blk.quantum, state.n_a(), state.n_b(), ClassicalQuantumState::word_bits(blk.row));
        }
    }
    return play(distiller, comps, m, trials, seed);
}

GameResult distinguisher_game(const LoccProtocol &distiller, const DensityMatrix &state, int m, long trials,
                              std::uint64_t seed) {
    std::vector<Component> comps;
    add_components(comps, state.matrix(), state.n_a(), state.n_b(), Bits{});
    return play(distiller, comps, m, trials, seed);
}

}  // namespace entlab
