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

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "entlab/commitment.h"
#include "entlab/errors.h"
#include "entlab/nisbq.h"
#include "entlab/prg.h"
#include "entlab/prp.h"
#include "entlab/random_oracle.h"
#include "test_util.h"

using namespace entlab;
using entlab_test::fixture_path;
using entlab_test::read_lines;

namespace {

std::vector<std::uint64_t> hex_lines(const std::string &rel) {
    std::vector<std::uint64_t> out;
    for (const auto &l : read_lines(fixture_path(rel))) {
        out.push_back(std::stoull(l, nullptr, 16));
    }
    return out;
}

// The six single-qubit Pauli eigenstates.
std::vector<Vector> six_states() {
    double r = 1.0 / std::sqrt(2.0);
    std::vector<Vector> out;
    for (auto [a, b] : std::vector<std::pair<Complex, Complex>>{
             {1, 0}, {0, 1}, {r, r}, {r, -r}, {r, Complex(0, r)}, {r, Complex(0, -r)}}) {
        Vector v(2);
        v << a, b;
        out.push_back(v);
    }
    return out;
}

}  // namespace

TEST(Prg, EmptyAndDeterministic) {
    EXPECT_TRUE(prg_bits(bits_from_uint(1, 3), 0).empty());
    Bits seed = bits_from_string("1011001");
    EXPECT_EQ(prg_bits(seed, 300), prg_bits(seed, 300));
    EXPECT_NE(prg_bits(seed, 64), prg_bits(bits_from_string("1011000"), 64));
}

TEST(Prg, StreamMatchesOneShot) {
    Bits seed = bits_from_uint(42, 16);
    PrgStream s(seed);
    Bits a = s.take(100);
    Bits b = s.take(300);
    EXPECT_EQ(concat(a, b), prg_bits(seed, 400));
}

TEST(Prg, Golden) {
    auto lines = read_lines(fixture_path("golden/prg_c0ffee_256.txt"));
    ASSERT_EQ(lines.size(), 1u);
    EXPECT_EQ(bits_to_string(prg_bits(bits_from_uint(0xC0FFEE, 24), 256)), lines[0]);
}

TEST(Prp, RoundTripM8) {
    PrpInstance p = PrpInstance::make(8, bits_from_uint(0x3c, 8));
    EXPECT_EQ(p.backend(), PrpBackend::Table);
    for (std::uint64_t x = 0; x < 256; x++) {
        EXPECT_EQ(p.inverse(p.forward(x)), x);
    }
}

TEST(Prp, ExhaustiveBijectionBothBackends) {
    for (int m = 2; m <= 12; m++) {
        for (PrpBackend be : {PrpBackend::Table, PrpBackend::Feistel}) {
            PrpInstance p(m, bits_from_uint(static_cast<std::uint64_t>(m) * 977, 16), be);
            std::vector<char> hit(size_t{1} << m, 0);
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); x++) {
                std::uint64_t y = p.forward(x);
                ASSERT_LT(y, std::uint64_t{1} << m);
                EXPECT_FALSE(hit[y]);
                hit[y] = 1;
                EXPECT_EQ(p.inverse(y), x);
            }
        }
    }
}

TEST(Prp, SampledRoundTripLargeDomain) {
    std::mt19937_64 rng(1);
    PrpInstance p = PrpInstance::make(32, bits_from_uint(7, 8));
    EXPECT_EQ(p.backend(), PrpBackend::Feistel);
    for (int i = 0; i < 200; i++) {
        std::uint64_t x = rng() & 0xFFFFFFFFu;
        EXPECT_EQ(p.inverse(p.forward(x)), x);
    }
}

TEST(Prp, DistinctKeysDiffer) {
    PrpInstance p = PrpInstance::make(8, bits_from_uint(1, 8));
    PrpInstance q = PrpInstance::make(8, bits_from_uint(2, 8));
    int diff = 0;
    for (std::uint64_t x = 0; x < 256; x++) {
        diff += p.forward(x) != q.forward(x);
    }
    EXPECT_GE(diff, 1);
}

TEST(Prp, LengthMismatchAndDomain) {
    PrpInstance p = PrpInstance::make(4, bits_from_uint(1, 4));
    EXPECT_THROW(p.forward(Bits{0, 1, 0}), DimensionError);
    EXPECT_THROW(p.forward(std::uint64_t{16}), DimensionError);
    EXPECT_EQ(p.forward(Bits{0, 0, 1, 1}), bits_from_uint(p.forward(std::uint64_t{3}), 4));
}

TEST(Prp, GoldenTableM4) {
    auto want = hex_lines("golden/prp_table_m4_a5.txt");
    ASSERT_EQ(want.size(), 16u);
    PrpInstance p(4, bits_from_uint(0xA5, 8), PrpBackend::Table);
    for (std::uint64_t x = 0; x < 16; x++) {
        EXPECT_EQ(p.forward(x), want[x]) << x;
    }
}

TEST(Prp, GoldenFeistelM24) {
    auto want = hex_lines("golden/prp_feistel_m24_1234.txt");
    ASSERT_EQ(want.size(), 64u);
    PrpInstance p(24, bits_from_uint(0x1234, 16), PrpBackend::Feistel);
    for (std::uint64_t x = 0; x < 64; x++) {
        EXPECT_EQ(p.forward(x), want[x]) << x;
    }
}

TEST(Derived, FibersOfH) {
    for (int n = 1; n <= 4; n++) {
        for (int m = n + 1; m <= 12; m++) {
            DerivedFunctions d(m, n, bits_from_uint(1, 8), bits_from_uint(2, 8), bits_from_uint(3 + m, 8));
            std::vector<int> count(size_t{1} << n, 0);
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); x++) {
                count[d.h(x)]++;
            }
            for (int c : count) {
                ASSERT_EQ(c, 1 << (m - n)) << n << "," << m;
            }
        }
    }
}

TEST(Derived, GInjectiveAndImageOfGH) {
    DerivedFunctions d(6, 3, bits_from_uint(9, 6), bits_from_uint(10, 6), bits_from_uint(11, 6));
    std::set<std::uint64_t> gs;
    for (std::uint64_t x = 0; x < 8; x++) {
        gs.insert(d.g(x));
    }
    EXPECT_EQ(gs.size(), 8u);
    EXPECT_THROW(d.g(8), DimensionError);
    DerivedFunctions e = derive_fgh(4, 2, bits_from_uint(1, 4), bits_from_uint(2, 4), bits_from_uint(3, 4));
    std::set<std::uint64_t> img;
    for (std::uint64_t x = 0; x < 16; x++) {
        img.insert(e.g(e.h(x)));
    }
    EXPECT_EQ(img.size(), 4u);
    EXPECT_THROW(derive_fgh(4, 4, Bits{}, Bits{}, Bits{}), std::invalid_argument);
}

TEST(RandomOracle, ConsistencyAndInverse) {
    RandomOracle h(3, 8, bits_from_uint(5, 8));
    std::uint64_t y = h.query(std::uint64_t{3});
    EXPECT_EQ(h.query(std::uint64_t{3}), y);
    EXPECT_EQ(h.sampled_count(), 1u);
    EXPECT_EQ(h.inverse_query(y), std::optional<std::uint64_t>(3));
    EXPECT_EQ(bits_from_uint(y, 8), prg_bits(concat(bits_from_uint(5, 8), bits_from_uint(3, 3)), 8));
    EXPECT_FALSE(h.lookup(4).has_value());
    h.populate_all();
    EXPECT_TRUE(h.fully_populated());
    EXPECT_EQ(h.sampled_count(), 8u);
}

TEST(RandomOracle, InverseOfUnsampledOutput) {
    RandomOracle h(3, 8, bits_from_uint(5, 8));
    h.query(std::uint64_t{0});
    int missing = 0;
    for (std::uint64_t y = 0; y < 256; y++) {
        missing += !h.inverse_query(y).has_value();
    }
    EXPECT_EQ(missing, 255);
}

TEST(RandomOracle, CollisionFlagsMatchScan) {
    int flagged = 0;
    for (std::uint64_t s = 0; s < 200; s++) {
        RandomOracle h(3, 8, bits_from_uint(s, 32));
        std::set<std::uint64_t> full, left, right;
        for (std::uint64_t x = 0; x < 8; x++) {
            std::uint64_t y = h.query(x);
            full.insert(y);
            left.insert(y >> 4);
            right.insert(y & 15);
        }
        EXPECT_EQ(h.injective(), full.size() == 8);
        EXPECT_EQ(h.left_injective(), left.size() == 8);
        EXPECT_EQ(h.right_injective(), right.size() == 8);
        flagged += !(left.size() == 8 && right.size() == 8);
    }
    EXPECT_GT(flagged, 0);
    EXPECT_LT(flagged, 200);
}

TEST(RandomOracle, JsonRoundTrip) {
    RandomOracle h(3, 8, bits_from_uint(77, 8));
    h.query(std::uint64_t{1});
    h.query(std::uint64_t{6});
    RandomOracle g = RandomOracle::load_json(h.dump_json());
    EXPECT_EQ(g.sampled_count(), 2u);
    EXPECT_EQ(g.lookup(6), h.lookup(6));
    EXPECT_EQ(g.query(std::uint64_t{2}), h.query(std::uint64_t{2}));
    EXPECT_EQ(g.dump_json(), h.dump_json());
}

TEST(Commitment, RoundTripAndInjective) {
    std::vector<char> seen(1 << 16, 0);
    for (int b = 0; b <= 1; b++) {
        for (std::uint32_t r = 0; r < (1u << 15); r++) {
            Commitment c = commit_bit(b, static_cast<std::uint16_t>(r));
            ASSERT_EQ(extract_bit(c.value), b);
            ASSERT_EQ(open_commitment(c.value), (r << 1) | static_cast<std::uint32_t>(b));
            ASSERT_FALSE(seen[c.value]);
            seen[c.value] = 1;
        }
    }
    EXPECT_THROW(commit_bit(2, 0), std::invalid_argument);
    EXPECT_THROW(commit_bit(0, 0x8000), DimensionError);
}

TEST(Commitment, Golden) {
    auto want = hex_lines("golden/commit_b17c.txt");
    ASSERT_EQ(want.size(), 65536u);
    for (std::uint32_t w = 0; w < 65536; w++) {
        ASSERT_EQ(commitment_prp().forward(w), want[w]) << w;
    }
    EXPECT_EQ(commit_bit(1, 0x1234).value, want[(0x1234 << 1) | 1]);
}

TEST(Nisbq, PadAveragedMarginal) {
    std::mt19937_64 rng(2);
    for (int n = 1; n <= 2; n++) {
        DensityMatrix rho = DensityMatrix::from_pure(random_pure_state(1, n, rng));
        auto cq = nisbq_apply(n, rho, NisbqMode::Exact, 3);
        EXPECT_NEAR(cq.trace(), 1.0, 1e-12);
        EXPECT_EQ(cq.blocks().size(), size_t{1} << (2 * n));
        DensityMatrix b = partial_trace(cq.quantum_marginal(), Side::B);
        long d = 1L << n;
        EXPECT_NEAR((b.matrix() - Matrix::Identity(d, d) / static_cast<double>(d)).norm(), 0.0, 1e-8);
    }
}

TEST(Nisbq, RoundTripSixStateProducts) {
    auto six = six_states();
    std::uint64_t seed = 0;
    for (const Vector &u : six) {
        for (const Vector &v : six) {
            Vector uv(4);
            uv << u(0) * v(0), u(0) * v(1), u(1) * v(0), u(1) * v(1);
            PureState s(0, 2, uv);
            DensityMatrix rho = DensityMatrix::from_pure(s);
            DensityMatrix back = nisbq_invert(nisbq_apply(2, rho, NisbqMode::Sampled, seed++));
            EXPECT_NEAR(fidelity_with_pure(back, s), 1.0, 1e-9);
            DensityMatrix back_exact = nisbq_invert(nisbq_apply(2, rho, NisbqMode::Exact, seed++));
            EXPECT_NEAR(fidelity_with_pure(back_exact, s), 1.0, 1e-9);
        }
    }
}

TEST(Nisbq, PlusAndEprHalf) {
    double r = 1.0 / std::sqrt(2.0);
    PureState plus(0, 1, Vector::Constant(2, r));
    EXPECT_NEAR(
        fidelity_with_pure(nisbq_invert(nisbq_apply(1, DensityMatrix::from_pure(plus), NisbqMode::Sampled, 4)), plus),
        1.0, 1e-12);
    for (std::uint64_t s = 0; s < 20; s++) {
        auto cq = nisbq_apply(1, DensityMatrix::from_pure(epr_pairs(1)), NisbqMode::Sampled, s);
        EXPECT_NEAR(fidelity_with_pure(nisbq_invert(cq), epr_pairs(1)), 1.0, 1e-9);
        EXPECT_EQ(cq.blocks().size(), 1u);
    }
}

TEST(Nisbq, ZeroInputGivesMaximallyMixedPad) {
    Matrix z = Matrix::Zero(4, 4);
    z(0, 0) = 1;
    auto cq = nisbq_apply(2, DensityMatrix(0, 2, z), NisbqMode::Exact, 5);
    EXPECT_NEAR((cq.quantum_marginal().matrix() - Matrix::Identity(4, 4) / 4.0).norm(), 0.0, 1e-9);
    EXPECT_NEAR(cq.non_classical_weight(), 0.0, 1e-15);
}

TEST(Nisbq, TamperedRegisterRejected) {
    auto cq = nisbq_apply(1, DensityMatrix::from_pure(epr_pairs(1)), NisbqMode::Sampled, 6);
    CommitWords w = cq.blocks()[0].row;
    CommitWords other = w;
    other[0] ^= 1;
    cq.add_coherence(w, other, Matrix::Identity(4, 4) * 0.1);
    EXPECT_GT(cq.non_classical_weight(), 1e-9);
    EXPECT_THROW(nisbq_invert(cq), std::invalid_argument);
    EXPECT_THROW(nisbq_apply(2, DensityMatrix::from_pure(epr_pairs(1)), NisbqMode::Exact, 0), DimensionError);
    EXPECT_THROW(nisbq_apply(4, DensityMatrix::maximally_mixed(0, 4), NisbqMode::Exact, 0), ResourceError);
}
