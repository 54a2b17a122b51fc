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

#include "entlab/net.h"

#include <random>

#include "entlab/errors.h"

namespace entlab {

NetFamily build_net(int n, double eta, std::uint64_t seed, long max_failures, size_t max_members) {
    if (n < 1 || n > 3) {
        throw ResourceError("build_net supports 1..3 qubits per side");
    }
    if (!(eta > 0.0 && eta < 1.0)) {
        throw std::invalid_argument("eta must lie in (0, 1)");
    }
    NetFamily net;
    net.n = n;
    net.eta = eta;
    std::mt19937_64 rng(seed);
    PureState phi = epr_pairs(n);
    Eigen::Index d = Eigen::Index{1} << n;
    std::uint64_t pads = std::uint64_t{1} << (2 * n);
    while (net.failures < max_failures && net.members.size() + pads <= max_members) {
        net.draws++;
        Matrix u = haar_unitary(static_cast<int>(d), rng);
        // (I (x) U) Phi: amplitude matrix Phi_mat * U^T.
        Matrix amp = phi.amplitude_matrix() * u.transpose();
        Vector v = Eigen::Map<Vector>(Matrix(amp.transpose()).data(), d * d);
        PureState cand = PureState::normalized(n, n, v);
        bool far = true;
        for (const auto &mbr : net.members) {
            if (fidelity_with_pure(cand, mbr) >= 1.0 - eta) {
                far = false;
                break;
            }
        }
        if (!far) {
            net.failures++;
            continue;
        }
        net.batch_starts.push_back(net.members.size());
        for (std::uint64_t pad = 0; pad < pads; pad++) {
            net.members.push_back(pauli_pad(cand, Side::B, bits_from_uint(pad >> n, n),
                                            bits_from_uint(pad & (static_cast<std::uint64_t>(d) - 1), n)));
        }
    }
    return net;
}

}  // namespace entlab
