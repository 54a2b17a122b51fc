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

#ifndef ENTLAB_BITS_H
#define ENTLAB_BITS_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace entlab {

/// A bitstring, one 0/1 entry per element. Element 0 is the first (most significant) bit.
using Bits = std::vector<std::uint8_t>;

Bits bits_from_uint(std::uint64_t value, int width);
std::uint64_t bits_to_uint(const Bits &bits);
Bits bits_from_string(std::string_view text);
std::string bits_to_string(const Bits &bits);
Bits concat(const Bits &a, const Bits &b);

/// Lowercase hex; the final nibble is zero-padded on the right when the length is not a multiple of 4.
std::string bits_to_hex(const Bits &bits);
Bits bits_from_hex(std::string_view hex, int width);

/// Unambiguous byte encoding used as hash input: 8-byte big-endian bit length,
/// then the bits packed MSB-first with zero padding in the last byte.
std::vector<std::uint8_t> encode_for_hash(const Bits &bits);

}  // namespace entlab

#endif
