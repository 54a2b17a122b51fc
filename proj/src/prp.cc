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

#include "entlab/prp.h"

#include <bit>
#include <numeric>

#include "entlab/errors.h"
#include "entlab/prg.h"

namespace entlab {

namespace {

int draw_width(std::uint64_t bound) {
    // Bits needed to represent values 0..bound.
    return bound == 0 ? 0 : static_cast<int>(std::bit_width(bound));
}

}  // namespace

const char *prp_backend_name(PrpBackend backend) {
    return backend == PrpBackend::Table ? "table" : "feistel";
}

PrpInstance::PrpInstance(int domain_bits, Bits key, PrpBackend backend)
    : m_(domain_bits), key_(std::move(key)), backend_(backend) {
    if (m_ < 1) {
        throw DimensionError("PRP domain must have at least one bit");
    }
    if (backend_ == PrpBackend::Table) {
        if (m_ > kMaxTableBits) {
            throw ResourceError("table PRP limited to " + std::to_string(kMaxTableBits) + " bits");
        }
        std::uint32_t size = std::uint32_t{1} << m_;
        table_.resize(size);
        std::iota(table_.begin(), table_.end(), 0u);
        PrgStream stream(concat(bits_from_uint(static_cast<std::uint64_t>(m_), 8), key_));
        for (std::uint32_t i = size - 1; i >= 1; i--) {
            int w = draw_width(i);
            std::uint64_t j;
            do {
                j = stream.take_uint(w);
            } while (j > i);
            std::swap(table_[i], table_[j]);
        }
        inverse_table_.resize(size);
        for (std::uint32_t x = 0; x < size; x++) {
            inverse_table_[table_[x]] = x;
        }
    } else {
        if (m_ < 2 || m_ > kMaxFeistelBits) {
            throw ResourceError("Feistel PRP supports 2.." + std::to_string(kMaxFeistelBits) + " bits");
        }
    }
}

PrpInstance PrpInstance::make(int domain_bits, Bits key) {
    return PrpInstance(domain_bits, std::move(key),
                       domain_bits <= kMaxTableBits ? PrpBackend::Table : PrpBackend::Feistel);
}

void PrpInstance::check(std::uint64_t v) const {
    if (m_ < 64 && (v >> m_) != 0) {
        throw DimensionError("value outside the " + std::to_string(m_) + "-bit PRP domain");
    }
}

std::uint64_t PrpInstance::round_fn(int round, std::uint64_t half) const {
    int h = (m_ + 1) / 2;
    Bits input = concat(concat(key_, bits_from_uint(static_cast<std::uint64_t>(round), 8)), bits_from_uint(half, h));
    return bits_to_uint(prg_bits(input, static_cast<std::size_t>(h)));
}

std::uint64_t PrpInstance::feistel(std::uint64_t v, bool invert) const {
    int h = (m_ + 1) / 2;
    std::uint64_t mask = (std::uint64_t{1} << h) - 1;
    std::uint64_t l = v >> h;
    std::uint64_t r = v & mask;
    if (!invert) {
        for (int i = 0; i < kFeistelRounds; i++) {
            std::uint64_t next = l ^ round_fn(i, r);
            l = r;
            r = next;
        }
    } else {
        for (int i = kFeistelRounds - 1; i >= 0; i--) {
            std::uint64_t prev = r ^ round_fn(i, l);
            r = l;
            l = prev;
        }
    }
    return (l << h) | r;
}

std::uint64_t PrpInstance::forward(std::uint64_t x) const {
    check(x);
    if (backend_ == PrpBackend::Table) {
        return table_[x];
    }
    std::uint64_t v = feistel(x, false);
    while (m_ < 64 && (v >> m_) != 0) {
        v = feistel(v, false);
    }
    return v;
}

std::uint64_t PrpInstance::inverse(std::uint64_t y) const {
    check(y);
    if (backend_ == PrpBackend::Table) {
        return inverse_table_[y];
    }
    std::uint64_t v = feistel(y, true);
    while (m_ < 64 && (v >> m_) != 0) {
        v = feistel(v, true);
    }
    return v;
}

Bits PrpInstance::forward(const Bits &x) const {
    if (static_cast<int>(x.size()) != m_) {
        throw DimensionError("PRP input must have " + std::to_string(m_) + " bits");
    }
    return bits_from_uint(forward(bits_to_uint(x)), m_);
}

Bits PrpInstance::inverse(const Bits &y) const {
    if (static_cast<int>(y.size()) != m_) {
        throw DimensionError("PRP input must have " + std::to_string(m_) + " bits");
    }
    return bits_from_uint(inverse(bits_to_uint(y)), m_);
}

DerivedFunctions::DerivedFunctions(int m, int n, const Bits &k_f, const Bits &k_g, const Bits &k_h)
    : m_(m), n_(n), f_(PrpInstance::make(m, k_f)), g_(PrpInstance::make(m, k_g)), h_(PrpInstance::make(m, k_h)) {
    if (n < 1 || m <= n) {
        throw std::invalid_argument("derived functions need m > n >= 1");
    }
}

std::uint64_t DerivedFunctions::g(std::uint64_t x) const {
    if (n_ < 64 && (x >> n_) != 0) {
        throw DimensionError("g takes " + std::to_string(n_) + "-bit inputs");
    }
    return g_.forward(x << (m_ - n_));
}

DerivedFunctions derive_fgh(int m, int n, const Bits &k_f, const Bits &k_g, const Bits &k_h) {
    return DerivedFunctions(m, n, k_f, k_g, k_h);
}

}  // namespace entlab
