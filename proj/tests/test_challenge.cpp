// Copyright 2026 The dsaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "dsaudit/challenge.hpp"

using namespace dsaudit;
using Suite = Bn254Suite;
using Scalar = Suite::Scalar;

namespace {

Challenge<Suite> fixed_challenge()
{
    BeaconWord w{};
    std::iota(w.begin(), w.end(), std::uint8_t{0});
    return Challenge<Suite>::from_word(w, 0);
}

std::string scalar_hex(const Scalar& s) { return to_hex(Suite::encode(s)); }

} // namespace

TEST(Beacon, SeededIsDeterministic)
{
    SeededBeacon a(42), b(42);
    EXPECT_EQ(draw_challenge<Suite>(a, 0), draw_challenge<Suite>(a, 0));
    EXPECT_EQ(draw_challenge<Suite>(a, 0), draw_challenge<Suite>(b, 0));
    auto c0 = draw_challenge<Suite>(a, 0), c1 = draw_challenge<Suite>(a, 1);
    EXPECT_NE(c0.c1_seed, c1.c1_seed);
    EXPECT_NE(c0.c2_seed, c1.c2_seed);
}

TEST(Beacon, ScriptedRunsOut)
{
    ScriptedBeacon beacon({BeaconWord{}});
    auto ch = draw_challenge<Suite>(beacon, 0);
    // r = reduce(xmd of sixteen zero bytes) under "chal-r"
    EXPECT_EQ(scalar_hex(ch.r), "0e899efade024270476a01a7816fe037a2d64728ef7838d0f48c6f5fd3c54c6e");
    try {
        draw_challenge<Suite>(beacon, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BeaconUnavailable);
    }
}

TEST(Challenge, WireFormat)
{
    auto ch = fixed_challenge();
    ch.round = 9;
    auto bytes = ch.to_bytes();
    EXPECT_EQ(bytes.size(), 56u);
    EXPECT_EQ(Challenge<Suite>::from_bytes(bytes), ch);
    EXPECT_EQ(ch.word().size(), 48u);
    bytes.pop_back();
    EXPECT_THROW(Challenge<Suite>::from_bytes(bytes), Error);
}

TEST(Expansion, Degenerate)
{
    auto cs = expand_challenge(fixed_challenge(), 1, 1);
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs.indices[0], 0u);
    EXPECT_EQ(cs.coefficients.size(), 1u);
}

TEST(Expansion, FullCoverageIsPermutation)
{
    auto cs = expand_challenge(fixed_challenge(), 10, 10);
    std::set<std::uint64_t> seen(cs.indices.begin(), cs.indices.end());
    EXPECT_EQ(seen.size(), 10u);
    EXPECT_EQ(*seen.rbegin(), 9u);
    EXPECT_EQ(expand_challenge(fixed_challenge(), 10, 500).size(), 10u);
}

TEST(Expansion, MatchesReferenceShuffle)
{
    auto ch = fixed_challenge();
    auto cs = expand_challenge(ch, 1000, 300);
    ASSERT_EQ(cs.size(), 300u);
    std::vector<std::uint64_t> head(cs.indices.begin(), cs.indices.begin() + 10);
    EXPECT_EQ(head, (std::vector<std::uint64_t>{820, 788, 833, 653, 296, 709, 260, 893, 448, 375}));
    Sha256 h;
    for (auto i : cs.indices) {
        Bytes b;
        put_u64_be(b, i);
        h.update(b);
    }
    auto digest = h.finish();
    EXPECT_EQ(to_hex(digest), "5eff1fab510e0df5f1f9f9f87461accd8dbf0742578e25f80e1e6f1dcb33537d");
    EXPECT_EQ(scalar_hex(cs.coefficients[0]), "0b173c4d7bafec5840b47c761038170b0091f51d80b95ae17e8332508c2892ee");
    EXPECT_EQ(scalar_hex(cs.coefficients[299]), "0af0e13193eaa4f918c5f2d1e54d9eda73b43d4a3addb2c13105ec8022368ae2");
    EXPECT_EQ(scalar_hex(ch.r), "1e1f027bd314b3017695079fe8343bc23d33c0cc6c7e25f6143928dc4222c750");

    auto again = expand_challenge(ch, 1000, 300);
    EXPECT_EQ(again.indices, cs.indices);
    EXPECT_EQ(again.coefficients, cs.coefficients);
}

TEST(Expansion, AlwaysDistinct)
{
    SeededBeacon beacon(7);
    for (std::uint64_t round = 0; round < 200; ++round) {
        auto ch = draw_challenge<Suite>(beacon, round);
        std::uint64_t d = 1 + round * 13 % 400, k = 1 + round * 7 % 300;
        auto cs = expand_challenge(ch, d, k);
        ASSERT_EQ(cs.size(), std::min(d, k));
        std::set<std::uint64_t> seen(cs.indices.begin(), cs.indices.end());
        ASSERT_EQ(seen.size(), cs.size());
        ASSERT_LT(*seen.rbegin(), d);
    }
}

TEST(Expansion, UniformSmoke)
{
    SeededBeacon beacon(99);
    std::array<int, 10> freq{};
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) ++freq[expand_challenge(draw_challenge<Suite>(beacon, t), 10, 1).indices[0]];
    const double sigma = std::sqrt(trials * 0.1 * 0.9);
    for (int f : freq) EXPECT_LT(std::abs(f - trials * 0.1), 5 * sigma);
}
