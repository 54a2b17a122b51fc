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

#include "entlab/commitment.h"

#include "entlab/errors.h"

namespace entlab {

const PrpInstance &commitment_prp() {
    static const PrpInstance prp(kCommitWordBits, bits_from_uint(kCommitKey, 16), PrpBackend::Table);
    return prp;
}

Commitment commit_bit(int b, std::uint16_t r) {
    if (b != 0 && b != 1) {
        throw std::invalid_argument("commit_bit takes a single bit");
    }
    if ((r >> kCommitRandomnessBits) != 0) {
        throw DimensionError("commitment randomness must fit in 15 bits");
    }
    auto word = static_cast<std::uint64_t>((r << 1) | b);
    return Commitment{b, r, static_cast<std::uint16_t>(commitment_prp().forward(word))};
}

std::uint16_t open_commitment(std::uint16_t value) {
    return static_cast<std::uint16_t>(commitment_prp().inverse(value));
}

int extract_bit(std::uint16_t value) {
    return open_commitment(value) & 1;
}

}  // namespace entlab
