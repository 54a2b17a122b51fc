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

#ifndef ENTLAB_EXPERIMENTS_H
#define ENTLAB_EXPERIMENTS_H

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "entlab/protocol.h"
#include "entlab/report.h"

namespace entlab {

/// Command-line parameters; experiments fill unset values with their own defaults.
struct ExperimentParams {
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> lambda;
    std::optional<int> ell;
    std::optional<double> eta;
    std::optional<long> trials;
    std::uint64_t seed = 0;
    std::optional<std::string> mode;
};

const std::vector<std::string> &experiment_ids();

/// Throws std::invalid_argument for an unknown id.
Report run_experiment(const std::string &id, const ExperimentParams &params);

struct RandomProtocolShape {
    int n_a = 2;
    int n_b = 2;
    int max_ancilla = 1;
    int max_c = 2;
    int max_rounds = 2;
    int max_gates = 6;
};

/// Random oracle-free protocol that keeps every qubit of A, A', B, B' as output.
LoccProtocol random_protocol(std::mt19937_64 &rng, const RandomProtocolShape &shape = {});

}  // namespace entlab

#endif
