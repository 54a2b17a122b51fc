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

#ifndef ENTLAB_CONSTRUCTIONS_H
#define ENTLAB_CONSTRUCTIONS_H

#include <cstdint>
#include <memory>
#include <random>
#include <string>

#include "entlab/bits.h"
#include "entlab/circuit.h"
#include "entlab/protocol.h"
#include "entlab/random_oracle.h"
#include "entlab/state.h"

namespace entlab {

enum class FamilyKind { Psi, Phi, Oracle, Commit };

const char *family_kind_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string &name);

/// Parameters and key material of one family member.
///   psi:    key = k_g || k_h, 2m bits
///   phi:    key = k_f, m bits
///   oracle: key = oracle seed (any length), lambda and ell set
///   commit: no key; lambda seeds the commitment randomness
struct FamilyKey {
    FamilyKind kind = FamilyKind::Psi;
    int n = 0;
    int m = 0;
    int lambda = 0;
    int ell = 0;
    Bits key;

    static FamilyKey psi(int n, int m, Bits key);
    static FamilyKey phi(int m, Bits key);
    static FamilyKey oracle(int lambda, int ell, Bits seed);
    static FamilyKey commit(int lambda, int n);

    Bits k_g() const;
    Bits k_h() const;
    Bits k_f() const;

    /// Throws std::invalid_argument if lengths do not match the kind.
    void check() const;

    /// {"kind", "n", "m", "lambda", "ell", "key_bits", "key_hex"}.
    std::string to_json() const;
    static FamilyKey from_json(const std::string &text);

    bool operator==(const FamilyKey &) const = default;
};

Bits random_bits(int count, std::mt19937_64 &rng);

/// 2^{-m/2} sum_x |x>_A |g(h(x))>_B with key = k_g || k_h.
PureState make_psi_k(int n, int m, const Bits &key);
/// 2^{-m/2} sum_x |x>_A |f(x)>_B with key = k_f.
PureState make_phi_k(int m, const Bits &key);

/// Zero-communication protocol from n EPR pairs: A appends m-n |+> ancillas and applies
/// FInv(k_h, .), B appends m-n |0> ancillas and applies F(k_g, .).
LoccProtocol psi_preparation_protocol(int n, int m, const Bits &key);
/// B applies FInv(k_f, .).
LoccProtocol phi_distillation_protocol(int m, const Bits &key);

struct OracleState {
    PureState state;
    bool left_injective = false;
    bool right_injective = false;

    bool injective_halves() const { return left_injective && right_injective; }
};

/// 2^{-lambda/2} sum_x |H(x)_L>_A |H(x)_R>_B, H: lambda -> 2 ell bits. The oracle is
/// fully populated as a side effect.
OracleState make_oracle_state(int lambda, int ell, RandomOracle &oracle);

struct LocalPreparation {
    LocalCircuit circuit;
    OracleRegistryPtr oracles;
};

/// Registry with "H": (x, y) -> (x, y ^ H(x)) and "HINV": (x, y) -> (x ^ H^-1(y), y),
/// unsampled preimages read as 0, on lambda + 2 ell bits.
OracleRegistryPtr oracle_state_registry(int lambda, int ell, RandomOracle &oracle);

/// Appends H on x, ORACLE H, ORACLE HINV over the qubits x || L || R.
void append_oracle_state_prep(LocalCircuit &circuit, const std::vector<int> &x, const std::vector<int> &left,
                              const std::vector<int> &right);

/// Single-party circuit on [x (lambda)][L (ell)][R (ell)] taking |0> to
/// |0^lambda> |psi^{H,lambda}>. Requires H injective.
LocalPreparation oracle_state_local_prep(int lambda, int ell, RandomOracle &oracle);

/// One-way protocol from ell EPR pairs: A swaps its EPR halves aside, prepares the state
/// locally with L in the output register, and teleports R to B.
LoccProtocol oracle_dilution_protocol(int lambda, int ell, RandomOracle &oracle);

/// Smallest seed index s >= start whose oracle bits_from_uint(s, 32) has injective halves.
std::uint64_t find_injective_oracle_seed(int lambda, int ell, std::uint64_t start = 0, int max_tries = 100000);
Bits oracle_seed_bits(std::uint64_t index);

}  // namespace entlab

#endif
