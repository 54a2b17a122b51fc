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

#ifndef ENTLAB_COMMITMENT_H
#define ENTLAB_COMMITMENT_H

#include <cstdint>

#include "entlab/bits.h"
#include "entlab/prp.h"

namespace entlab {

inline constexpr int kCommitRandomnessBits = 15;
inline constexpr int kCommitWordBits = 16;
/// Fixed 16-bit key of the commitment permutation.
inline constexpr std::uint64_t kCommitKey = 0xB17C;

struct Commitment {
    int bit = 0;
    std::uint16_t randomness = 0;
    std::uint16_t value = 0;
};

/// The fixed-key 16-bit table permutation behind commitments.
const PrpInstance &commitment_prp();

/// value = P((r << 1) | b).
Commitment commit_bit(int b, std::uint16_t r);
int extract_bit(std::uint16_t value);
/// (r << 1) | b for a commitment value.
std::uint16_t open_commitment(std::uint16_t value);

}  // namespace entlab

#endif
