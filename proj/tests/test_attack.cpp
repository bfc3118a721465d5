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

#include "dsaudit/attack.hpp"
#include "instance.hpp"

using namespace dsaudit;
using namespace dsaudit::testing;

namespace {

TranscriptSet<Suite> points_of(const CombinedPolynomial<Suite>& p, const std::vector<Scalar>& xs)
{
    TranscriptSet<Suite> ts;
    for (const auto& x : xs) ts.points.emplace_back(x, p(x));
    return ts;
}

/// Non-private audit rounds against a replaying beacon: d seed groups of s
/// rounds each, all chunks challenged.
std::vector<ObservedRound<Suite>> unblinded_rounds(const Instance& in, std::uint64_t seed)
{
    SeededBeacon base(seed);
    ReplayBeacon beacon(base, in.enc.s);
    std::vector<ObservedRound<Suite>> out;
    for (std::uint64_t round = 0; round < in.enc.d * in.enc.s; ++round) {
        auto ch = draw_challenge<Suite>(beacon, round);
        auto cs = expand_challenge(ch, in.enc.d, in.enc.d);
        auto prf = prove_nonprivate(in.keys.pk, in.enc, in.tags, ch, cs);
        EXPECT_TRUE(verify_nonprivate(in.context(in.enc.d), ch, cs, prf));
        out.push_back({ch, prf.y});
    }
    return out;
}

} // namespace

TEST(Interpolation, Constant)
{
    TranscriptSet<Suite> ts;
    ts.points.emplace_back(Scalar::from_u64(5), Scalar::from_u64(11));
    EXPECT_EQ(interpolate_combined(ts, 1).coefficients, std::vector<Scalar>{Scalar::from_u64(11)});
}

TEST(Interpolation, Errors)
{
    TranscriptSet<Suite> ts;
    ts.points.emplace_back(Scalar::from_u64(1), Scalar::from_u64(2));
    ts.points.emplace_back(Scalar::from_u64(3), Scalar::from_u64(4));
    try {
        interpolate_combined(ts, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InsufficientPoints);
    }
    ts.points.emplace_back(Scalar::from_u64(1), Scalar::from_u64(9));
    try {
        interpolate_combined(ts, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DuplicatePoint);
    }
}

TEST(Interpolation, AgreesWithVandermondeSolve)
{
    SeededRandom rng(40);
    for (std::size_t s : {1u, 2u, 5u, 17u}) {
        CombinedPolynomial<Suite> p;
        for (std::size_t j = 0; j < s; ++j) p.coefficients.push_back(Scalar::random(rng));
        std::vector<Scalar> xs(s);
        for (auto& x : xs) x = Scalar::random(rng);
        auto ts = points_of(p, xs);
        EXPECT_EQ(interpolate_combined(ts, s), p);

        // independent route: solve V c = y with rows (1, x, x^2, ...)
        std::vector<LinearObservation<Suite>> rows;
        for (const auto& [x, y] : ts.points) {
            LinearObservation<Suite> row;
            Scalar xp = Scalar::one();
            for (std::size_t j = 0; j < s; ++j, xp *= x) row.weights.push_back(xp);
            row.combined.coefficients = {y};
            rows.push_back(row);
        }
        auto sol = recover_blocks(rows);
        for (std::size_t j = 0; j < s; ++j) EXPECT_EQ(sol[j][0], p.coefficients[j]);
    }
}

TEST(Interpolation, HonestTranscriptsGiveCombinedPolynomial)
{
    SeededRandom rng(41);
    auto in = make_instance(rng, 700, 3);
    auto rounds = unblinded_rounds(in, 5);
    auto sets = group_transcripts(rounds);
    ASSERT_EQ(sets.size(), in.enc.d);
    Challenge<Suite> ch;
    ch.c1_seed = sets[0].c1_seed;
    ch.c2_seed = sets[0].c2_seed;
    EXPECT_EQ(interpolate_combined(sets[0], 3), combine_chunks(in.enc, expand_challenge(ch, in.enc.d, in.enc.d)));
}

TEST(Recovery, IdentitySystem)
{
    SeededRandom rng(42);
    CombinedPolynomial<Suite> p{{Scalar::random(rng), Scalar::random(rng)}};
    auto chunks = recover_blocks<Suite>({{{Scalar::one()}, p}});
    EXPECT_EQ(chunks[0], p.coefficients);
}

TEST(Recovery, SingularSystem)
{
    CombinedPolynomial<Suite> p{{Scalar::one()}};
    std::vector<Scalar> w{Scalar::from_u64(2), Scalar::from_u64(3)};
    try {
        recover_blocks<Suite>({{w, p}, {w, p}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularSystem);
    }
}

TEST(Recovery, WholeFileFromUnblindedTrails)
{
    SeededRandom rng(43);
    for (std::uint32_t s : {2u, 3u}) {
        auto in = make_instance(rng, 31 * s * 3 + 17, s);
        ASSERT_EQ(in.enc.d, 4u);
        auto rec = recover_file(unblinded_rounds(in, 100 + s), in.enc.d, in.enc.d, s);
        EXPECT_EQ(rec.blocks, in.enc.blocks);
        rec.n = in.enc.n;
        rec.original_length = in.data.size();
        EXPECT_EQ(decode_file(rec, {s, 31}), in.data);
    }
}

TEST(Privacy, BlindedTrailsRecoverNothing)
{
    SeededRandom rng(44);
    auto in = make_instance(rng, 31 * 3 * 4, 3);
    SeededBeacon base(9);
    ReplayBeacon beacon(base, 3);
    std::vector<std::pair<Challenge<Suite>, AuditProof<Suite>>> rounds, zero_rounds, mixed;
    CombinedPolynomial<Suite> truth;
    for (std::uint64_t round = 0; round < 3; ++round) {
        auto ch = draw_challenge<Suite>(beacon, round);
        auto cs = expand_challenge(ch, in.enc.d, in.enc.d);
        truth = combine_chunks(in.enc, cs);
        rounds.emplace_back(ch, prove_private(in.keys.pk, in.enc, in.tags, ch, cs, rng));
        zero_rounds.emplace_back(ch, prove_private_with_blinding(in.keys.pk, in.enc, in.tags, ch, cs, Scalar::zero()).proof);
        mixed.push_back(round == 1 ? rounds.back() : zero_rounds.back());
    }
    auto rep = attack_private_transcripts(rounds, 3, truth);
    EXPECT_EQ(rep.raw_mismatches, 3u);
    EXPECT_EQ(rep.normalised_mismatches, 3u);
    EXPECT_FALSE(rep.leaked());

    // without blinding the public zeta is the only mask, and it is removable
    auto control = attack_private_transcripts(zero_rounds, 3, truth);
    EXPECT_EQ(control.normalised_mismatches, 0u);
    EXPECT_TRUE(control.leaked());

    EXPECT_FALSE(attack_private_transcripts(mixed, 3, truth).leaked());
}
