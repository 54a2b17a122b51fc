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

#include "entlab/constructions.h"

#include <cmath>

#include "entlab/errors.h"
#include "entlab/prp.h"
#include "json.hpp"

namespace entlab {

namespace {

void check_psi_params(int n, int m) {
    if (n < 1 || m <= n) {
        throw std::invalid_argument("psi family needs m > n >= 1");
    }
    if (2 * m > kMaxPureQubits) {
        throw ResourceError("psi state on 2m = " + std::to_string(2 * m) + " qubits exceeds the budget");
    }
}

void check_phi_params(int m) {
    if (m < 1) {
        throw std::invalid_argument("phi family needs m >= 1");
    }
    if (2 * m > kMaxPureQubits) {
        throw ResourceError("phi state on 2m = " + std::to_string(2 * m) + " qubits exceeds the budget");
    }
}

Bits slice(const Bits &b, size_t from, size_t len) {
    return Bits(b.begin() + static_cast<std::ptrdiff_t>(from), b.begin() + static_cast<std::ptrdiff_t>(from + len));
}

std::vector<int> range(int begin, int count) {
    std::vector<int> out;
    for (int i = 0; i < count; i++) {
        out.push_back(begin + i);
    }
    return out;
}

OracleEntry prp_entry(OracleRole role, std::shared_ptr<const PrpInstance> prp, bool invert) {
    OracleEntry e;
    e.role = role;
    e.width = prp->domain_bits();
    e.apply = [prp, invert](std::uint64_t x) { return invert ? prp->inverse(x) : prp->forward(x); };
    return e;
}

}  // namespace

const char *family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Psi:
            return "psi";
        case FamilyKind::Phi:
            return "phi";
        case FamilyKind::Oracle:
            return "oracle";
        case FamilyKind::Commit:
            return "commit";
    }
    return "?";
}

FamilyKind family_kind_from_name(const std::string &name) {
    for (auto k : {FamilyKind::Psi, FamilyKind::Phi, FamilyKind::Oracle, FamilyKind::Commit}) {
        if (name == family_kind_name(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown family kind '" + name + "'");
}

FamilyKey FamilyKey::psi(int n, int m, Bits key) {
    FamilyKey k{FamilyKind::Psi, n, m, 0, 0, std::move(key)};
    k.check();
    return k;
}

FamilyKey FamilyKey::phi(int m, Bits key) {
    FamilyKey k{FamilyKind::Phi, 0, m, 0, 0, std::move(key)};
    k.check();
    return k;
}

FamilyKey FamilyKey::oracle(int lambda, int ell, Bits seed) {
    FamilyKey k{FamilyKind::Oracle, 0, 0, lambda, ell, std::move(seed)};
    k.check();
    return k;
}

FamilyKey FamilyKey::commit(int lambda, int n) {
    FamilyKey k{FamilyKind::Commit, n, n, lambda, 0, {}};
    k.check();
    return k;
}

Bits FamilyKey::k_g() const {
    if (kind != FamilyKind::Psi) {
        throw std::logic_error("k_g belongs to psi keys");
    }
    return slice(key, 0, static_cast<size_t>(m));
}

Bits FamilyKey::k_h() const {
    if (kind != FamilyKind::Psi) {
        throw std::logic_error("k_h belongs to psi keys");
    }
    return slice(key, static_cast<size_t>(m), static_cast<size_t>(m));
}

Bits FamilyKey::k_f() const {
    if (kind != FamilyKind::Phi) {
        throw std::logic_error("k_f belongs to phi keys");
    }
    return key;
}

void FamilyKey::check() const {
    switch (kind) {
        case FamilyKind::Psi:
            if (n < 1 || m <= n) {
                throw std::invalid_argument("psi key needs m > n >= 1");
            }
            if (static_cast<int>(key.size()) != 2 * m) {
                throw std::invalid_argument("psi key must have 2m = " + std::to_string(2 * m) + " bits");
            }
            return;
        case FamilyKind::Phi:
            if (m < 1 || static_cast<int>(key.size()) != m) {
                throw std::invalid_argument("phi key must have m = " + std::to_string(m) + " bits");
            }
            return;
        case FamilyKind::Oracle:
            if (lambda < 1 || ell < 1) {
                throw std::invalid_argument("oracle key needs lambda, ell >= 1");
            }
            return;
        case FamilyKind::Commit:
            if (n < 1 || !key.empty()) {
                throw std::invalid_argument("commit key needs n >= 1 and no key material");
            }
            return;
    }
}

std::string FamilyKey::to_json() const {
    nlohmann::json j;
    j["kind"] = family_kind_name(kind);
    j["n"] = n;
    j["m"] = m;
    j["lambda"] = lambda;
    j["ell"] = ell;
    j["key_bits"] = key.size();
    j["key_hex"] = bits_to_hex(key);
    return j.dump();
}

FamilyKey FamilyKey::from_json(const std::string &text) {
    auto j = nlohmann::json::parse(text);
    FamilyKey k;
    k.kind = family_kind_from_name(j.at("kind").get<std::string>());
    k.n = j.value("n", 0);
    k.m = j.value("m", 0);
    k.lambda = j.value("lambda", 0);
    k.ell = j.value("ell", 0);
    k.key = bits_from_hex(j.value("key_hex", std::string()), j.value("key_bits", 0));
    k.check();
    return k;
}

Bits random_bits(int count, std::mt19937_64 &rng) {
    Bits out(static_cast<size_t>(count));
    for (auto &b : out) {
        b = static_cast<std::uint8_t>(rng() >> 63);
    }
    return out;
}

PureState make_psi_k(int n, int m, const Bits &key) {
    check_psi_params(n, m);
    FamilyKey k = FamilyKey::psi(n, m, key);
    PrpInstance g = PrpInstance::make(m, k.k_g());
    PrpInstance h = PrpInstance::make(m, k.k_h());
    std::uint64_t size = std::uint64_t{1} << m;
    Vector amps = Vector::Zero(static_cast<Eigen::Index>(size * size));
    double a = std::pow(2.0, -m / 2.0);
    for (std::uint64_t x = 0; x < size; x++) {
        std::uint64_t gh = g.forward((h.forward(x) >> (m - n)) << (m - n));
        amps(static_cast<Eigen::Index>((x << m) | gh)) = a;
    }
    return PureState(m, m, std::move(amps));
}

PureState make_phi_k(int m, const Bits &key) {
    check_phi_params(m);
    FamilyKey k = FamilyKey::phi(m, key);
    PrpInstance f = PrpInstance::make(m, k.k_f());
    std::uint64_t size = std::uint64_t{1} << m;
    Vector amps = Vector::Zero(static_cast<Eigen::Index>(size * size));
    double a = std::pow(2.0, -m / 2.0);
    for (std::uint64_t x = 0; x < size; x++) {
        amps(static_cast<Eigen::Index>((x << m) | f.forward(x))) = a;
    }
    return PureState(m, m, std::move(amps));
}

LoccProtocol psi_preparation_protocol(int n, int m, const Bits &key) {
    check_psi_params(n, m);
    FamilyKey k = FamilyKey::psi(n, m, key);
    auto reg = std::make_shared<OracleRegistry>();
    reg->add("FINV_kh", prp_entry(OracleRole::FInv, std::make_shared<const PrpInstance>(PrpInstance::make(m, k.k_h())),
                                  true));
    reg->add("F_kg", prp_entry(OracleRole::F, std::make_shared<const PrpInstance>(PrpInstance::make(m, k.k_g())), false));
    LoccProtocol p = LoccProtocol::empty(n, n, m - n, m - n, 0, m, m);
    p.oracles = reg;
    LocalCircuit &a = p.rounds[0].a;
    for (int q = n; q < m; q++) {
        a.add(Gate::h(q));
    }
    a.add(Gate::oracle_call("FINV_kh", range(0, m)));
    p.rounds[0].b.add(Gate::oracle_call("F_kg", range(0, m)));
    return p;
}

LoccProtocol phi_distillation_protocol(int m, const Bits &key) {
    check_phi_params(m);
    FamilyKey k = FamilyKey::phi(m, key);
    auto reg = std::make_shared<OracleRegistry>();
    reg->add("FINV_kf", prp_entry(OracleRole::FInv, std::make_shared<const PrpInstance>(PrpInstance::make(m, k.k_f())),
                                  true));
    LoccProtocol p = LoccProtocol::empty(m, m, 0, 0, 0, m, m);
    p.oracles = reg;
    p.rounds[0].b.add(Gate::oracle_call("FINV_kf", range(0, m)));
    return p;
}

OracleState make_oracle_state(int lambda, int ell, RandomOracle &oracle) {
    if (oracle.in_bits() != lambda || oracle.out_bits() != 2 * ell) {
        throw DimensionError("oracle dimensions do not match (lambda, 2 ell)");
    }
    if (2 * ell > kMaxPureQubits) {
        throw ResourceError("oracle state on " + std::to_string(2 * ell) + " qubits exceeds the budget");
    }
    oracle.populate_all();
    Vector amps = Vector::Zero(Eigen::Index{1} << (2 * ell));
    double a = std::pow(2.0, -lambda / 2.0);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << lambda); x++) {
        amps(static_cast<Eigen::Index>(oracle.query(x))) += a;
    }
    OracleState out{PureState::normalized(ell, ell, amps), oracle.left_injective(), oracle.right_injective()};
    return out;
}

OracleRegistryPtr oracle_state_registry(int lambda, int ell, RandomOracle &oracle) {
    if (oracle.in_bits() != lambda || oracle.out_bits() != 2 * ell) {
        throw DimensionError("oracle dimensions do not match (lambda, 2 ell)");
    }
    oracle.populate_all();
    auto snapshot = std::make_shared<const RandomOracle>(oracle);
    int y_bits = 2 * ell;
    std::uint64_t y_mask = (std::uint64_t{1} << y_bits) - 1;
    auto reg = std::make_shared<OracleRegistry>();
    OracleEntry fwd;
    fwd.role = OracleRole::H;
    fwd.width = lambda + y_bits;
    fwd.apply = [snapshot, y_bits, y_mask](std::uint64_t v) {
        std::uint64_t x = v >> y_bits;
        return (x << y_bits) | ((v & y_mask) ^ *snapshot->lookup(x));
    };
    OracleEntry inv;
    inv.role = OracleRole::HInv;
    inv.width = lambda + y_bits;
    inv.apply = [snapshot, y_bits, y_mask](std::uint64_t v) {
        std::uint64_t y = v & y_mask;
        std::uint64_t pre = snapshot->inverse_query(y).value_or(0);
        return (((v >> y_bits) ^ pre) << y_bits) | y;
    };
    reg->add("H", std::move(fwd));
    reg->add("HINV", std::move(inv));
    return reg;
}

void append_oracle_state_prep(LocalCircuit &circuit, const std::vector<int> &x, const std::vector<int> &left,
                              const std::vector<int> &right) {
    for (int q : x) {
        circuit.add(Gate::h(q));
    }
    std::vector<int> all = x;
    all.insert(all.end(), left.begin(), left.end());
    all.insert(all.end(), right.begin(), right.end());
    circuit.add(Gate::oracle_call("H", all));
    circuit.add(Gate::oracle_call("HINV", all));
}

LocalPreparation oracle_state_local_prep(int lambda, int ell, RandomOracle &oracle) {
    OracleRegistryPtr reg = oracle_state_registry(lambda, ell, oracle);
    if (!oracle.injective()) {
        throw std::invalid_argument("local preparation requires an injective oracle instance");
    }
    LocalPreparation prep;
    prep.oracles = reg;
    prep.circuit.width = lambda + 2 * ell;
    append_oracle_state_prep(prep.circuit, range(0, lambda), range(lambda, ell), range(lambda + ell, ell));
    return prep;
}

LoccProtocol oracle_dilution_protocol(int lambda, int ell, RandomOracle &oracle) {
    OracleRegistryPtr reg = oracle_state_registry(lambda, ell, oracle);
    if (!oracle.injective()) {
        throw std::invalid_argument("oracle dilution requires an injective oracle instance");
    }
    // A: [L = EPR halves][E'][x][R], then C.
    LoccProtocol p = LoccProtocol::empty(ell, ell, lambda + 2 * ell, 0, 2 * ell, ell, ell);
    p.oracles = reg;
    LocalCircuit &a = p.rounds[0].a;
    std::vector<int> left = range(0, ell);
    std::vector<int> epr = range(ell, ell);
    std::vector<int> x = range(2 * ell, lambda);
    std::vector<int> right = range(2 * ell + lambda, ell);
    for (int i = 0; i < ell; i++) {
        a.swap(left[i], epr[i]);
    }
    append_oracle_state_prep(a, x, left, right);
    append_teleport_sender(a, right, epr, p.n_a + p.t_a, 0);
    append_teleport_receiver(p.rounds[0].b, range(0, ell), 0);
    return p;
}

Bits oracle_seed_bits(std::uint64_t index) {
    return bits_from_uint(index, 32);
}

std::uint64_t find_injective_oracle_seed(int lambda, int ell, std::uint64_t start, int max_tries) {
    for (int t = 0; t < max_tries; t++) {
        RandomOracle o(lambda, 2 * ell, oracle_seed_bits(start + static_cast<std::uint64_t>(t)));
        if (o.left_injective() && o.right_injective()) {
            return start + static_cast<std::uint64_t>(t);
        }
    }
    throw std::runtime_error("no oracle seed with injective halves found");
}

}  // namespace entlab
