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

#ifndef ENTLAB_PRP_H
#define ENTLAB_PRP_H

#include <cstdint>
#include <vector>

#include "entlab/bits.h"

namespace entlab {

enum class PrpBackend { Table, Feistel };

const char *prp_backend_name(PrpBackend backend);

inline constexpr int kMaxTableBits = 20;
inline constexpr int kMaxFeistelBits = 48;
inline constexpr int kFeistelRounds = 4;

/// Keyed permutation of {0,1}^m.
///
/// Table backend: Fisher-Yates shuffle of 0..2^m-1 driven by prg_bits(bits(m, 8) || key),
/// each index j in [0, i] drawn with ceil(log2(i+1)) bits and rejection. Feistel
/// backend: four balanced rounds with round function prg_bits(key || bits(r, 8) || R, h),
/// on 2h = m (+1 if odd) bits, with cycle walking back into {0,1}^m.
class PrpInstance {
   public:
    PrpInstance(int domain_bits, Bits key, PrpBackend backend);
    /// Table backend up to 20 bits, Feistel above.
    static PrpInstance make(int domain_bits, Bits key);

    int domain_bits() const { return m_; }
    const Bits &key() const { return key_; }
    PrpBackend backend() const { return backend_; }

    std::uint64_t forward(std::uint64_t x) const;
    std::uint64_t inverse(std::uint64_t y) const;
    Bits forward(const Bits &x) const;
    Bits inverse(const Bits &y) const;

   private:
    std::uint64_t feistel(std::uint64_t v, bool invert) const;
    std::uint64_t round_fn(int round, std::uint64_t half) const;
    void check(std::uint64_t v) const;

    int m_;
    Bits key_;
    PrpBackend backend_;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inverse_table_;
};

/// f(x) = F(k_f, x); g(x) = F(k_g, x || 0^(m-n)); h(x) = n-bit prefix of F(k_h, x).
class DerivedFunctions {
   public:
    DerivedFunctions(int m, int n, const Bits &k_f, const Bits &k_g, const Bits &k_h);

    int m() const { return m_; }
    int n() const { return n_; }
    std::uint64_t f(std::uint64_t x) const { return f_.forward(x); }
    std::uint64_t g(std::uint64_t x) const;
    std::uint64_t h(std::uint64_t x) const { return h_.forward(x) >> (m_ - n_); }

    const PrpInstance &prp_f() const { return f_; }
    const PrpInstance &prp_g() const { return g_; }
    const PrpInstance &prp_h() const { return h_; }

   private:
    int m_;
    int n_;
    PrpInstance f_;
    PrpInstance g_;
    PrpInstance h_;
};

DerivedFunctions derive_fgh(int m, int n, const Bits &k_f, const Bits &k_g, const Bits &k_h);

}  // namespace entlab

#endif
