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

#ifndef ENTLAB_NET_H
#define ENTLAB_NET_H

#include <cstdint>
#include <vector>

#include "entlab/state.h"

namespace entlab {

struct NetFamily {
    int n = 0;
    double eta = 0.0;
    std::vector<PureState> members;
    /// Index of the first member of each accepted batch of 4^n padded states.
    std::vector<size_t> batch_starts;
    long draws = 0;
    long failures = 0;
};

/// Grows a set of maximally entangled states (I (x) U) Phi^n with Haar U: a candidate is
/// kept when its fidelity with every member is below 1 - eta, and then all 4^n Pauli pads
/// of it on B join as one batch. Stops after max_failures rejected candidates or once
/// the member budget is reached.
NetFamily build_net(int n, double eta, std::uint64_t seed, long max_failures, size_t max_members = 256);

}  // namespace entlab

#endif
