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

#ifndef ENTLAB_RANDOM_ORACLE_H
#define ENTLAB_RANDOM_ORACLE_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "entlab/bits.h"

namespace entlab {

/// Lazily sampled random function {0,1}^in_bits -> {0,1}^out_bits with an inversion
/// interface. H(x) = prg_bits(seed || x, out_bits). The reverse table keeps the first
/// sampled preimage of each output; inverting an output nobody has sampled yields nullopt.
///
/// Not thread-safe while lazily sampling. Call populate_all() and share it as const.
class RandomOracle {
   public:
    RandomOracle(int in_bits, int out_bits, Bits seed);

    int in_bits() const { return in_bits_; }
    int out_bits() const { return out_bits_; }
    const Bits &seed() const { return seed_; }

    std::uint64_t query(std::uint64_t x);
    Bits query(const Bits &x);
    std::optional<std::uint64_t> inverse_query(std::uint64_t y) const;
    std::optional<Bits> inverse_query(const Bits &y) const;

    /// Table lookups without sampling.
    std::optional<std::uint64_t> lookup(std::uint64_t x) const;

    void populate_all();
    bool fully_populated() const;
    std::size_t sampled_count() const { return forward_.size(); }

    /// Collision checks over the full domain (populates first).
    bool injective();
    /// Left and right halves of out_bits (out_bits even) are each injective.
    bool left_injective();
    bool right_injective();

    /// {"in_bits", "out_bits", "seed" (bit string), "table": {x bits: y bits}}.
    std::string dump_json() const;
    static RandomOracle load_json(const std::string &text);

   private:
    std::uint64_t sample(std::uint64_t x) const;
    void record(std::uint64_t x, std::uint64_t y);
    bool injective_under(std::uint64_t (*project)(std::uint64_t, int), int half);

    int in_bits_;
    int out_bits_;
    Bits seed_;
    std::map<std::uint64_t, std::uint64_t> forward_;
    std::map<std::uint64_t, std::uint64_t> reverse_;
};

}  // namespace entlab

#endif
