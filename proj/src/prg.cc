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

#include "entlab/prg.h"

#include <openssl/sha.h>

namespace entlab {

namespace {

void hash_block(const std::vector<std::uint8_t> &prefix, std::uint64_t counter, Bits &out) {
    std::vector<std::uint8_t> msg(prefix);
    for (int i = 7; i >= 0; i--) {
        msg.push_back(static_cast<std::uint8_t>((counter >> (8 * i)) & 0xFF));
    }
    unsigned char digest[SHA256_DIGEST_LENGTH];
    SHA256(msg.data(), msg.size(), digest);
    for (unsigned char byte : digest) {
        for (int k = 7; k >= 0; k--) {
            out.push_back(static_cast<std::uint8_t>((byte >> k) & 1));
        }
    }
}

}  // namespace

Bits prg_bits(const Bits &seed, std::size_t count) {
    PrgStream s(seed);
    return s.take(count);
}

PrgStream::PrgStream(Bits seed) : prefix_(encode_for_hash(seed)) {
}

void PrgStream::refill() {
    buffer_.erase(buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(pos_));
    pos_ = 0;
    hash_block(prefix_, counter_++, buffer_);
}

Bits PrgStream::take(std::size_t count) {
    while (buffer_.size() - pos_ < count) {
        refill();
    }
    Bits out(buffer_.begin() + static_cast<std::ptrdiff_t>(pos_),
             buffer_.begin() + static_cast<std::ptrdiff_t>(pos_ + count));
    pos_ += count;
    return out;
}

std::uint64_t PrgStream::take_uint(int width) {
    return bits_to_uint(take(static_cast<std::size_t>(width)));
}

}  // namespace entlab
