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

#ifndef ENTLAB_PRG_H
#define ENTLAB_PRG_H

#include <cstddef>
#include <cstdint>

#include "entlab/bits.h"

namespace entlab {

/// SHA-256 in counter mode: block i = SHA256(encode_for_hash(seed) || i as 8-byte
/// big-endian), blocks concatenated MSB-first and truncated to `count` bits.
Bits prg_bits(const Bits &seed, std::size_t count);

/// Incremental reader over the prg_bits expansion of a seed; take(a) followed by take(b)
/// returns the same bits as prg_bits(seed, a + b).
class PrgStream {
   public:
    explicit PrgStream(Bits seed);

    Bits take(std::size_t count);
    std::uint64_t take_uint(int width);

   private:
    void refill();

    std::vector<std::uint8_t> prefix_;
    std::uint64_t counter_ = 0;
    Bits buffer_;
    std::size_t pos_ = 0;
};

}  // namespace entlab

#endif
