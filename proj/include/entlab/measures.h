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

#ifndef ENTLAB_MEASURES_H
#define ENTLAB_MEASURES_H

#include <cstdint>
#include <string>
#include <vector>

#include "entlab/execute.h"
#include "entlab/protocol.h"
#include "entlab/state.h"

namespace entlab {

enum class EvalMode { Exact, Sampled };

const char *eval_mode_name(EvalMode mode);

struct ErrorReport {
    double value = 0.0;
    EvalMode mode = EvalMode::Exact;
    long trials = 0;
    double std_error = 0.0;
};

struct SampleOptions {
    long trials = 10000;
    std::uint64_t seed = 0;
};

/// 1 - <Phi^m| Gamma(rho) |Phi^m>. The protocol must output m qubits on each side.
ErrorReport distillation_error(const LoccProtocol &p, const ProtocolInput &rho, int m, EvalMode mode,
                               SampleOptions opts = {});

/// 1 - <target| Gamma(Phi^n) |target>. The protocol must take n EPR halves on each side
/// and the target must be pure with the protocol's output partition.
ErrorReport dilution_error(const LoccProtocol &p, const AnyState &target, int n, EvalMode mode,
                           SampleOptions opts = {});

/// max(H(A), H(B)) in bits.
double entanglement_entropy(const AnyState &state);
double entanglement_entropy(const PureState &state);

/// H(AB) - H(B) in bits.
double conditional_entropy(const DensityMatrix &rho);

/// True iff `src` can be turned into `dst` by LOCC, i.e. src is majorized by dst.
/// Both vectors sorted descending and summing to 1; the shorter one is zero-padded.
bool nielsen_convertible(const std::vector<double> &src, const std::vector<double> &dst);

/// Sorted Schmidt coefficients as a std::vector.
std::vector<double> schmidt_coefficients(const PureState &state);

/// Largest m with lambda_max <= 2^-m.
int exact_pure_distillable(const PureState &state);
/// ceil(log2 of the Schmidt rank).
int exact_pure_cost(const PureState &state);

struct MonotonicityCheck {
    double input_entropy = 0.0;
    double average_output_entropy = 0.0;
    size_t branches = 0;
    bool holds = false;
};

/// Branch-averaged entanglement entropy against the input's. Throws if a branch is mixed.
MonotonicityCheck locc_monotonicity_detail(const LoccProtocol &p, const PureState &input);
bool locc_monotonicity_check(const LoccProtocol &p, const PureState &input);

}  // namespace entlab

#endif
