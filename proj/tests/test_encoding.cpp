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

#include "dsaudit/encoding.hpp"

using namespace dsaudit;
using Suite = Bn254Suite;
using Scalar = Suite::Scalar;

namespace {

Bytes random_bytes(RandomSource& rng, std::size_t len)
{
    Bytes b(len);
    rng.fill(b);
    return b;
}

} // namespace

TEST(Encoding, ExactFitHasNoPadding)
{
    SeededRandom rng(2);
    auto data = random_bytes(rng, 62);
    auto enc = encode_file<Suite>(data, {2, 31}, Scalar::from_u64(7));
    EXPECT_EQ(enc.n, 2u);
    EXPECT_EQ(enc.d, 1u);
    ASSERT_EQ(enc.blocks.size(), 2u);
    Bytes first(32, 0);
    std::copy(data.begin(), data.begin() + 31, first.begin() + 1);
    EXPECT_EQ(enc.blocks[0], *Scalar::from_bytes_be(first));
}

TEST(Encoding, PartialChunkIsZeroPadded)
{
    SeededRandom rng(3);
    auto data = random_bytes(rng, 93);
    auto enc = encode_file<Suite>(data, {2, 31}, Scalar::from_u64(7));
    EXPECT_EQ(enc.n, 3u);
    EXPECT_EQ(enc.d, 2u);
    Bytes third(32, 0);
    std::copy(data.begin() + 62, data.end(), third.begin() + 1);
    EXPECT_EQ(enc.chunk(1)[0], *Scalar::from_bytes_be(third));
    EXPECT_TRUE(enc.chunk(1)[1].is_zero());
}

TEST(Encoding, PartialBlockPadsOnTheRight)
{
    Bytes data{0xab};
    auto enc = encode_file<Suite>(data, {1, 31}, Scalar::zero());
    Bytes expect(32, 0);
    expect[1] = 0xab;
    EXPECT_EQ(enc.blocks[0], *Scalar::from_bytes_be(expect));
}

TEST(Encoding, GigabyteShape)
{
    // integer ceilings: 2^30 / 31 -> 34,636,834 blocks; / 50 -> 692,737 chunks
    auto shape = encoded_shape(std::uint64_t{1} << 30, {50, 31});
    EXPECT_EQ(shape.n, 34636834u);
    EXPECT_EQ(shape.d, 692737u);
}

TEST(Encoding, ShapeBounds)
{
    for (std::uint64_t len : {1u, 30u, 31u, 32u, 1000u, 4097u}) {
        for (std::size_t s : {1u, 2u, 17u, 50u}) {
            auto sh = encoded_shape(len, {s, 31});
            EXPECT_GE(sh.d * s, sh.n);
            EXPECT_GE(sh.n, (sh.d - 1) * s + 1);
        }
    }
}

TEST(Encoding, RoundTripAllLengths)
{
    SeededRandom rng(4);
    for (std::size_t len = 1; len <= 1000; ++len) {
        auto data = random_bytes(rng, len);
        EncodingParams params{1 + len % 7, 31};
        auto enc = encode_file<Suite>(data, params, Scalar::from_u64(len));
        ASSERT_EQ(decode_file(enc, params), data) << "length " << len;
    }
}

TEST(Encoding, AllZeroFileRoundTrips)
{
    Bytes zeros(31, 0);
    auto enc = encode_file<Suite>(zeros, {3, 31}, Scalar::one());
    EXPECT_EQ(decode_file(enc, {3, 31}), zeros);
}

TEST(Encoding, Errors)
{
    EXPECT_THROW(encode_file<Suite>(Bytes{}, {2, 31}, Scalar::one()), Error);
    try {
        encode_file<Suite>(Bytes{}, {2, 31}, Scalar::one());
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyFile);
    }
    auto enc = encode_file<Suite>(Bytes(40, 1), {2, 31}, Scalar::one());
    enc.original_length = enc.n * 31 + 1;
    try {
        decode_file(enc, {2, 31});
        FAIL() << "expected InconsistentLength";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InconsistentLength);
    }
    EXPECT_THROW((EncodingParams{2, 32}.validate<Suite>()), Error);
    EXPECT_THROW((EncodingParams{0, 31}.validate<Suite>()), Error);
}

TEST(Encoding, TagOverheadIsAboutOneOverS)
{
    for (std::size_t s = 1; s <= 100; ++s) {
        double overhead = static_cast<double>(Suite::g1_bytes) / static_cast<double>(s * Suite::block_bytes);
        EXPECT_LE(overhead, 1.04 / static_cast<double>(s));
    }
}

TEST(ChunkPolynomial, HandExamples)
{
    SeededRandom rng(5);
    Scalar m = Scalar::random(rng);
    std::vector<Scalar> one{m};
    EXPECT_EQ(chunk_polynomial_eval<Scalar>(one, Scalar::random(rng)), m);
    std::vector<Scalar> c{Scalar::from_u64(1), Scalar::from_u64(2), Scalar::from_u64(3)};
    EXPECT_EQ(chunk_polynomial_eval<Scalar>(c, Scalar::from_u64(2)), Scalar::from_u64(17));
}

TEST(ChunkPolynomial, MatchesPowerSum)
{
    SeededRandom rng(6);
    for (int t = 0; t < 20; ++t) {
        std::vector<Scalar> c(1 + t);
        for (auto& v : c) v = Scalar::random(rng);
        Scalar x = Scalar::random(rng);
        Scalar sum = Scalar::zero(), xp = Scalar::one();
        for (const auto& v : c) {
            sum += v * xp;
            xp *= x;
        }
        EXPECT_EQ(chunk_polynomial_eval<Scalar>(c, x), sum);
    }
}
