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

#include "entlab/state_io.h"

#include <bit>
#include <cstring>

#include "entlab/errors.h"

namespace entlab {

namespace {

constexpr char kMagic[4] = {'Q', 'S', 'T', '1'};

void put_u32(std::string &out, std::uint32_t v) {
    for (int i = 0; i < 4; i++) {
        out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    }
}

void put_f64(std::string &out, double d) {
    auto v = std::bit_cast<std::uint64_t>(d);
    for (int i = 0; i < 8; i++) {
        out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    }
}

struct Reader {
    std::string_view data;
    size_t pos = 0;

    std::uint64_t take(int bytes) {
        if (pos + bytes > data.size()) {
            throw DimensionError("state fixture truncated");
        }
        std::uint64_t v = 0;
        for (int i = 0; i < bytes; i++) {
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data[pos + i])) << (8 * i);
        }
        pos += bytes;
        return v;
    }
    Complex complex() {
        double re = std::bit_cast<double>(take(8));
        double im = std::bit_cast<double>(take(8));
        return {re, im};
    }
};

}  // namespace

std::string serialize_state(const AnyState &state) {
    std::string out(kMagic, 4);
    put_u32(out, static_cast<std::uint32_t>(side_qubits(state, Side::A)));
    put_u32(out, static_cast<std::uint32_t>(side_qubits(state, Side::B)));
    if (const auto *p = std::get_if<PureState>(&state)) {
        put_u32(out, 0);
        for (const Complex &c : p->amplitudes()) {
            put_f64(out, c.real());
            put_f64(out, c.imag());
        }
    } else {
        put_u32(out, 1);
        const Matrix &m = std::get<DensityMatrix>(state).matrix();
        for (Eigen::Index i = 0; i < m.rows(); i++) {
            for (Eigen::Index j = 0; j < m.cols(); j++) {
                put_f64(out, m(i, j).real());
                put_f64(out, m(i, j).imag());
            }
        }
    }
    return out;
}

AnyState deserialize_state(std::string_view bytes) {
    if (bytes.size() < 16 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw DimensionError("not a state fixture (bad magic)");
    }
    Reader r{bytes, 4};
    auto n_a = static_cast<int>(r.take(4));
    auto n_b = static_cast<int>(r.take(4));
    auto kind = r.take(4);
    if (n_a + n_b > kMaxPureQubits) {
        throw ResourceError("state fixture exceeds qubit budget");
    }
    Eigen::Index dim = Eigen::Index{1} << (n_a + n_b);
    AnyState result = PureState::basis(0, 0, 0);
    if (kind == 0) {
        Vector v(dim);
        for (Eigen::Index i = 0; i < dim; i++) {
            v(i) = r.complex();
        }
        result = PureState(n_a, n_b, std::move(v));
    } else if (kind == 1) {
        if (n_a + n_b > kMaxDensityQubits) {
            throw ResourceError("density fixture exceeds qubit budget");
        }
        Matrix m(dim, dim);
        for (Eigen::Index i = 0; i < dim; i++) {
            for (Eigen::Index j = 0; j < dim; j++) {
                m(i, j) = r.complex();
            }
        }
        result = DensityMatrix(n_a, n_b, std::move(m));
    } else {
        throw DimensionError("unknown state kind " + std::to_string(kind));
    }
    if (r.pos != bytes.size()) {
        throw DimensionError("trailing bytes after state payload");
    }
    return result;
}

}  // namespace entlab
