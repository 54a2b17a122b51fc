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

#include "entlab/bits.h"

#include "entlab/errors.h"

namespace entlab {

Bits bits_from_uint(std::uint64_t value, int width) {
    if (width < 0 || width > 64) {
        throw DimensionError("bit width must be in [0, 64]");
    }
    if (width < 64 && (value >> width) != 0) {
        throw DimensionError("value does not fit in " + std::to_string(width) + " bits");
    }
    Bits out(width);
    for (int i = 0; i < width; i++) {
        out[i] = static_cast<std::uint8_t>((value >> (width - 1 - i)) & 1);
    }
    return out;
}

std::uint64_t bits_to_uint(const Bits &bits) {
    if (bits.size() > 64) {
        throw DimensionError("bitstring longer than 64 bits");
    }
    std::uint64_t v = 0;
    for (auto b : bits) {
        v = (v << 1) | (b & 1);
    }
    return v;
}

Bits bits_from_string(std::string_view text) {
    Bits out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '0' || c == '1') {
            out.push_back(static_cast<std::uint8_t>(c - '0'));
        } else {
            throw DimensionError(std::string("not a bit character: '") + c + "'");
        }
    }
    return out;
}

std::string bits_to_string(const Bits &bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

Bits concat(const Bits &a, const Bits &b) {
    Bits out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::string bits_to_hex(const Bits &bits) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    for (size_t i = 0; i < bits.size(); i += 4) {
        int nibble = 0;
        for (size_t k = 0; k < 4; k++) {
            nibble <<= 1;
            if (i + k < bits.size()) {
                nibble |= bits[i + k] & 1;
            }
        }
        s.push_back(kDigits[nibble]);
    }
    return s;
}

Bits bits_from_hex(std::string_view hex, int width) {
    if (width < 0 || static_cast<size_t>(width) > hex.size() * 4) {
        throw DimensionError("hex string too short for requested width");
    }
    Bits out;
    out.reserve(hex.size() * 4);
    for (char c : hex) {
        int v;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            v = c - 'A' + 10;
        } else {
            throw DimensionError(std::string("not a hex digit: '") + c + "'");
        }
        for (int k = 3; k >= 0; k--) {
            out.push_back(static_cast<std::uint8_t>((v >> k) & 1));
        }
    }
    out.resize(width);
    return out;
}

std::vector<std::uint8_t> encode_for_hash(const Bits &bits) {
    std::vector<std::uint8_t> out;
    std::uint64_t len = bits.size();
    for (int i = 7; i >= 0; i--) {
        out.push_back(static_cast<std::uint8_t>((len >> (8 * i)) & 0xFF));
    }
    std::uint8_t acc = 0;
    int filled = 0;
    for (auto b : bits) {
        acc = static_cast<std::uint8_t>((acc << 1) | (b & 1));
        if (++filled == 8) {
            out.push_back(acc);
            acc = 0;
            filled = 0;
        }
    }
    if (filled) {
        out.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
    }
    return out;
}

}  // namespace entlab
