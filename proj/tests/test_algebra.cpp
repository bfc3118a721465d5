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

#include <string>

#include "dsaudit/algebra/hash.hpp"
#include "dsaudit/algebra/msm.hpp"
#include "dsaudit/suite.hpp"

using namespace dsaudit;
using namespace dsaudit::algebra;
using namespace dsaudit::algebra::bn254;

namespace {

std::string to_decimal(const Fp& x)
{
    U256 v = x.to_canonical();
    std::string s;
    while (!is_zero(v)) s.insert(s.begin(), static_cast<char>('0' + div_small(v, 10)));
    return s.empty() ? "0" : s;
}

G1Affine random_g1(RandomSource& rng) { return (G1::generator() * Fr::random(rng)).to_affine(); }
G2Affine random_g2(RandomSource& rng) { return (G2::generator() * Fr::random(rng)).to_affine(); }

} // namespace

TEST(Field, ArithmeticIdentities)
{
    SeededRandom rng(1);
    for (int i = 0; i < 50; ++i) {
        Fp a = Fp::random(rng);
        Fp b = Fp::random(rng);
        EXPECT_EQ((a + b) - b, a);
        EXPECT_EQ(a * (b + Fp::one()), a * b + a);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Fp::one());
        }
        auto root = a.square().sqrt();
        ASSERT_TRUE(root.has_value());
        EXPECT_TRUE(*root == a || *root == -a);
        Fr s = Fr::random(rng);
        EXPECT_EQ(s * s.inverse(), Fr::one());
    }
    EXPECT_EQ(Fr::zero().inverse(), Fr::zero());
}

TEST(Field, SquareTestMatchesEulerCriterion)
{
    SeededRandom rng(15);
    auto euler = [](const auto& v) {
        using F = std::decay_t<decltype(v)>;
        auto e = F::modulus;
        e[0] -= 1;
        for (int i = 0; i < 3; ++i) e[i] = (e[i] >> 1) | (e[i + 1] << 63);
        e[3] >>= 1;
        return v.is_zero() || v.pow(e).is_one();
    };
    std::size_t squares = 0;
    for (int i = 0; i < 200; ++i) {
        Fp a = Fp::random(rng);
        Fr b = Fr::random(rng);
        EXPECT_EQ(a.is_square(), euler(a));
        EXPECT_EQ(b.is_square(), euler(b));
        EXPECT_TRUE((a * a).is_square());
        EXPECT_EQ(a.is_square(), a.sqrt().has_value());
        squares += a.is_square();
    }
    EXPECT_GT(squares, 60u);
    EXPECT_LT(squares, 140u);
    EXPECT_TRUE(Fp::zero().is_square());
    EXPECT_FALSE((-Fp::one()).is_square());
    for (std::uint64_t v = 1; v < 50; ++v) EXPECT_EQ(Fp::from_u64(v).is_square(), euler(Fp::from_u64(v)));
}

TEST(Field, StrictDecodingRejectsModulus)
{
    std::uint8_t buf[32];
    Fr::from_u64(5).to_bytes_be(buf);
    EXPECT_TRUE(Fr::from_bytes_be(buf).has_value());
    // r itself
    Bytes r = from_hex("30644e72e131a029b85045b68181585d2833e84879b9709143e1f593f0000001");
    EXPECT_FALSE(Fr::from_bytes_be(r).has_value());
    EXPECT_THROW(codec::read_scalar(r), Error);
}

TEST(Field, WideReductionMatchesLimbArithmetic)
{
    // 2^256 mod r via wide decoding equals the Montgomery constant
    Bytes wide(64, 0);
    wide[31] = 1;
    EXPECT_EQ(Fr::from_wide_be(wide).to_canonical(), Fr::r1);
}

TEST(Pairing, MatchesIndependentReference)
{
    // e(g1, g2) from py_ecc (bn128.pairing), coefficients over Fp[w]/(w^12 - 18 w^6 + 82)
    const char* expected[12] = {
        "18443897754565973717256850119554731228214108935025491924036055734000366132575",
        "10734401203193558706037776473742910696504851986739882094082017010340198538454",
        "5985796159921227033560968606339653189163760772067273492369082490994528765680",
        "4093294155816392700623820137842432921872230622290337094591654151434545306688",
        "642121370160833232766181493494955044074321385528883791668868426879070103434",
        "4527449849947601357037044178952942489926487071653896435602814872334098625391",
        "3758435817766288188804561253838670030762970764366672594784247447067868088068",
        "18059168546148152671857026372711724379319778306792011146784665080987064164612",
        "14656606573936501743457633041048024656612227301473084805627390748872617280984",
        "17918828665069491344039743589118342552553375221610735811112289083834142789347",
        "19455424343576886430889849773367397946457449073528455097210946839000147698372",
        "7484542354754424633621663080190936924481536615300815203692506276894207018007",
    };
    Gt e = pairing(G1Curve::generator(), G2Curve::generator());
    // a + b*u with u = w^6 - 9
    Fp flat[12];
    for (int k = 0; k < 6; ++k) {
        const Fp2& c = e.value().coeff(k);
        flat[k] += c.c0 - c.c1 * Fp::from_u64(9);
        flat[k + 6] += c.c1;
    }
    for (int k = 0; k < 12; ++k) EXPECT_EQ(to_decimal(flat[k]), expected[k]) << "coefficient " << k;
    EXPECT_FALSE(e.is_identity());
    EXPECT_TRUE(gt_in_subgroup(e));
}

TEST(Pairing, Bilinearity)
{
    SeededRandom rng(2);
    const Gt base = pairing(G1Curve::generator(), G2Curve::generator());
    for (int i = 0; i < 100; ++i) {
        Fr a = Fr::random(rng);
        Fr b = Fr::random(rng);
        Gt lhs = pairing((G1::generator() * a).to_affine(), (G2::generator() * b).to_affine());
        ASSERT_EQ(lhs, base.pow(a * b)) << "trial " << i;
    }
}

TEST(Pairing, MultiPairingIsProductAndHandlesIdentity)
{
    SeededRandom rng(3);
    G1Affine p1 = random_g1(rng), p2 = random_g1(rng);
    G2Affine q1 = random_g2(rng), q2 = random_g2(rng);
    G2Prepared pq1(q1), pq2(q2), pinf(G2Affine::identity());
    std::pair<G1Affine, const G2Prepared*> pairs[3] = {{p1, &pq1}, {p2, &pq2}, {p1, &pinf}};
    EXPECT_EQ(multi_pairing(pairs), pairing(p1, q1) * pairing(p2, q2));
    EXPECT_TRUE(pairing(G1Affine::identity(), q1).is_identity());
    // e(-P, Q) e(P, Q) = 1
    std::pair<G1Affine, const G2Prepared*> cancel[2] = {{p1, &pq1}, {-p1, &pq1}};
    EXPECT_TRUE(multi_pairing(cancel).is_identity());
}

TEST(Groups, ExponentLaws)
{
    SeededRandom rng(4);
    for (int i = 0; i < 10; ++i) {
        Fr a = Fr::random(rng), b = Fr::random(rng);
        EXPECT_EQ((G1::generator() * a) * b, G1::generator() * (a * b));
        EXPECT_EQ((G2::generator() * a) * b, G2::generator() * (a * b));
        Gt g = pairing(G1Curve::generator(), G2Curve::generator());
        EXPECT_EQ(g.pow(a).pow(b), g.pow(a * b));
    }
    EXPECT_TRUE((G1::generator() * Fr::zero()).is_identity());
    EXPECT_TRUE(G1::generator().mul(Fr::modulus).is_identity());
    EXPECT_EQ(Bn254Suite::mul_g1(Fr::from_u64(12345)), G1::generator() * Fr::from_u64(12345));
}

TEST(Groups, EndomorphismMulMatchesDoubleAndAdd)
{
    SeededRandom rng(14);
    const Fr lambda = Fr::from_canonical(parse_hex<4>("b3c4d79d41a917585bfc41088d8daaa78b17ea66b99c90dd"));
    G1 p = random_g1(rng);
    EXPECT_EQ(p.scale_x(glv::beta()), p.mul(lambda.to_canonical()));

    std::vector<Fr> ks = {Fr::zero(), Fr::one(), -Fr::one(), lambda, -lambda, Fr::from_u64(2)};
    for (int i = 0; i < 40; ++i) ks.push_back(Fr::random(rng));
    for (const Fr& k : ks) {
        EXPECT_EQ(p * k, p.mul(k.to_canonical()));
        EXPECT_EQ(G1::generator() * k, G1::generator().mul(k.to_canonical()));
    }
}

TEST(Groups, MsmMatchesNaiveSum)
{
    SeededRandom rng(5);
    for (std::size_t n : {0u, 1u, 5u, 9u, 40u, 300u}) {
        std::vector<G1Affine> pts;
        std::vector<Fr> ks;
        G1 naive;
        for (std::size_t i = 0; i < n; ++i) {
            pts.push_back(random_g1(rng));
            ks.push_back(i % 7 == 3 ? Fr::zero() : Fr::random(rng));
            naive += G1(pts.back()) * ks.back();
        }
        EXPECT_EQ((msm<G1Curve, Fr>(pts, ks)), naive) << "n = " << n;
    }
}

TEST(Codec, EncodingSizes)
{
    EXPECT_EQ(Bn254Suite::encode(Bn254Suite::g1()).size(), 32u);
    EXPECT_EQ(Bn254Suite::encode(Bn254Suite::g2()).size(), 64u);
    EXPECT_EQ(Bn254Suite::encode(pairing(Bn254Suite::g1(), Bn254Suite::g2())).size(), 192u);
    EXPECT_EQ(Bn254Suite::encode(Fr::one()).size(), 32u);
}

TEST(Codec, RoundTripAndCanonical)
{
    SeededRandom rng(6);
    Gt base = pairing(G1Curve::generator(), G2Curve::generator());
    for (int i = 0; i < 20; ++i) {
        Fr s = Fr::random(rng);
        EXPECT_EQ(codec::read_scalar(codec::encode_scalar(s)), s);

        G1Affine p = random_g1(rng);
        Bytes pb = codec::encode_g1(p);
        EXPECT_EQ(codec::read_g1(pb), p);
        EXPECT_EQ(codec::encode_g1(codec::read_g1(pb)), pb);

        G2Affine q = random_g2(rng);
        Bytes qb = codec::encode_g2(q);
        EXPECT_EQ(codec::read_g2(qb), q);
        EXPECT_EQ(codec::encode_g2(codec::read_g2(qb)), qb);

        Gt g = base.pow(s);
        Bytes gb = codec::encode_gt(g);
        EXPECT_EQ(codec::read_gt(gb), g);
        EXPECT_EQ(codec::encode_gt(codec::read_gt(gb)), gb);
    }
    EXPECT_TRUE(codec::read_g1(codec::encode_g1(G1Affine::identity())).infinity);
    EXPECT_TRUE(codec::read_g2(codec::encode_g2(G2Affine::identity())).infinity);
    EXPECT_TRUE(codec::read_gt(codec::encode_gt(Gt::identity())).is_identity());
}

TEST(Codec, RejectsMalformedInput)
{
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Io;
    };
    Bytes g1 = codec::encode_g1(G1Curve::generator());
    Bytes short_g1(g1.begin(), g1.end() - 1);
    EXPECT_EQ(code_of([&] { codec::read_g1(short_g1); }), ErrorCode::WrongLength);

    // x = 0 gives y^2 = 3, a non-residue: off the curve
    Bytes off(32, 0);
    off[0] = 0x80;
    EXPECT_EQ(code_of([&] { codec::read_g1(off); }), ErrorCode::InvalidEncoding);
    Bytes uncompressed = g1;
    uncompressed[0] &= 0x3f;
    EXPECT_EQ(code_of([&] { codec::read_g1(uncompressed); }), ErrorCode::InvalidEncoding);
    Bytes dirty_identity(32, 0);
    dirty_identity[0] = 0x40;
    dirty_identity[31] = 1;
    EXPECT_EQ(code_of([&] { codec::read_g1(dirty_identity); }), ErrorCode::InvalidEncoding);

    // an arbitrary torus coordinate lands in the cyclotomic subgroup but not
    // in the order-r subgroup
    Bytes gt(192, 0);
    gt[31] = 7;
    EXPECT_EQ(code_of([&] { codec::read_gt(gt); }), ErrorCode::InvalidEncoding);
    Bytes gt_short(191, 0);
    EXPECT_EQ(code_of([&] { codec::read_gt(gt_short); }), ErrorCode::WrongLength);
}

TEST(Hash, ExpandMessageRfcVector)
{
    Bytes out = expand_message_xmd({}, "QUUX-V01-CS02-with-expander-SHA256-128", 0x20);
    EXPECT_EQ(to_hex(out), "68a985b87eb6b46952128911f2a4412bbc302a9d759667f87f7a21d803f07235");
}

TEST(Hash, HashToG1GoldenVectors)
{
    // frozen from tests/oracle/hash_oracle.py
    Bytes msg;
    append(msg, codec::encode_scalar(Fr::one()));
    put_u64_be(msg, 0);
    G1Affine h = hash_to_g1("tag-index", msg);
    EXPECT_TRUE(h.on_curve());
    EXPECT_EQ(to_hex(codec::encode_g1(h)), "e996c32b784a5e2c39cb7915c58bbc889912164a68d559f950f80a5e7ab425f0");
    EXPECT_EQ(to_hex(codec::encode_g1(hash_to_g1("tag-index", {}))),
              "8f39d575b5c7ba93e6167447d81dabeb6d0325e5b021aab52f02ab3b070d5b15");
}

TEST(Hash, DeterministicAndDomainSeparated)
{
    Bytes m1 = {1, 2, 3}, m2 = {1, 2, 4};
    EXPECT_EQ(hash_to_g1("a", m1), hash_to_g1("a", m1));
    EXPECT_FALSE(hash_to_g1("a", m1) == hash_to_g1("a", m2));
    EXPECT_FALSE(hash_to_g1("a", m1) == hash_to_g1("b", m1));
    EXPECT_FALSE(hash_to_scalar("a", m1) == hash_to_scalar("b", m1));
}

TEST(Hash, GtToScalarGolden)
{
    Gt identity = pairing(G1Curve::generator(), G2Curve::generator()).pow(Fr::zero());
    EXPECT_TRUE(identity.is_identity());
    Fr zeta = hash_gt_to_scalar(identity);
    EXPECT_EQ(to_hex(codec::encode_scalar(zeta)), "222a7f618feebeeed224b7038a9bcd3db79c78e960bbfb251165abcaee4585d1");
    Gt other = pairing(G1Curve::generator(), G2Curve::generator());
    EXPECT_EQ(hash_gt_to_scalar(other), hash_gt_to_scalar(other));
    EXPECT_FALSE(hash_gt_to_scalar(other) == zeta);
}
