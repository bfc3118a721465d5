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

#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dsaudit/common/sha256.hpp"
#include "dsaudit/suite.hpp"

namespace dsaudit {

using BeaconWord = std::array<std::uint8_t, 48>;

/// Source of per-round public randomness. Implementations must return the
/// same word whenever the same round is requested again.
class RandomnessBeacon {
public:
    virtual ~RandomnessBeacon() = default;
    virtual BeaconWord next(std::uint64_t round) = 0;
};

/// Deterministic beacon for tests and simulation: word(round) is
/// SHA-256(seed || round || 0) || SHA-256(seed || round || 1)[0..16).
class SeededBeacon final : public RandomnessBeacon {
public:
    explicit SeededBeacon(std::uint64_t seed) : seed_(seed) {}

    BeaconWord next(std::uint64_t round) override
    {
        BeaconWord w{};
        for (std::uint8_t part = 0; part < 2; ++part) {
            Bytes msg;
            put_u64_be(msg, seed_);
            put_u64_be(msg, round);
            msg.push_back(part);
            Digest h = Sha256().update("dsaudit-beacon").update(msg).finish();
            std::copy_n(h.begin(), part == 0 ? 32 : 16, w.begin() + 32 * part);
        }
        return w;
    }

private:
    std::uint64_t seed_;
};

/// Replays a fixed list of words, one per round; later rounds are unavailable.
class ScriptedBeacon final : public RandomnessBeacon {
public:
    explicit ScriptedBeacon(std::vector<BeaconWord> words) : words_(std::move(words)) {}

    BeaconWord next(std::uint64_t round) override
    {
        require(round < words_.size(), ErrorCode::BeaconUnavailable, "no beacon output for round " + std::to_string(round));
        return words_[static_cast<std::size_t>(round)];
    }

private:
    std::vector<BeaconWord> words_;
};

/// One round's challenge: two 128-bit seeds and the evaluation point r.
template <class Suite>
struct Challenge {
    std::array<std::uint8_t, 16> c1_seed{};
    std::array<std::uint8_t, 16> c2_seed{};
    std::array<std::uint8_t, 16> r_bytes{};
    typename Suite::Scalar r;
    std::uint64_t round = 0;

    /// c1 || c2 || r_bytes, the 48 bytes the contract stores.
    BeaconWord word() const
    {
        BeaconWord w{};
        std::copy(c1_seed.begin(), c1_seed.end(), w.begin());
        std::copy(c2_seed.begin(), c2_seed.end(), w.begin() + 16);
        std::copy(r_bytes.begin(), r_bytes.end(), w.begin() + 32);
        return w;
    }

    static Challenge from_word(const BeaconWord& w, std::uint64_t round)
    {
        Challenge ch;
        std::copy_n(w.begin(), 16, ch.c1_seed.begin());
        std::copy_n(w.begin() + 16, 16, ch.c2_seed.begin());
        std::copy_n(w.begin() + 32, 16, ch.r_bytes.begin());
        ch.r = Suite::hash_to_scalar("chal-r", ch.r_bytes);
        ch.round = round;
        return ch;
    }

    /// 48-byte word || round (u64 BE)
    Bytes to_bytes() const
    {
        auto w = word();
        Bytes out(w.begin(), w.end());
        put_u64_be(out, round);
        return out;
    }

    static Challenge from_bytes(ByteSpan in)
    {
        ByteReader r(in);
        BeaconWord w{};
        auto body = r.take(48);
        std::copy(body.begin(), body.end(), w.begin());
        auto round = r.u64();
        r.expect_end();
        return from_word(w, round);
    }

    friend bool operator==(const Challenge& a, const Challenge& b)
    {
        return a.word() == b.word() && a.round == b.round;
    }
};

template <class Suite>
Challenge<Suite> draw_challenge(RandomnessBeacon& beacon, std::uint64_t round)
{
    return Challenge<Suite>::from_word(beacon.next(round), round);
}

/// Challenged chunk indices and their coefficients.
template <class Suite>
struct ChallengeSet {
    std::vector<std::uint64_t> indices;
    std::vector<typename Suite::Scalar> coefficients;

    std::size_t size() const { return indices.size(); }
};

/// Keystream used by the index permutation: SHA-256("dsaudit-prp" || seed ||
/// counter) blocks read as big-endian 64-bit words.
class PrpStream {
public:
    explicit PrpStream(std::span<const std::uint8_t, 16> seed) { std::copy(seed.begin(), seed.end(), seed_.begin()); }

    std::uint64_t next_word()
    {
        if (pos_ == 4) {
            Bytes ctr;
            put_u64_be(ctr, counter_++);
            block_ = Sha256().update("dsaudit-prp").update(seed_).update(ctr).finish();
            pos_ = 0;
        }
        return get_be(ByteSpan(block_).subspan(8 * pos_++, 8));
    }

    /// Uniform in [0, bound) by rejection of the biased top range.
    std::uint64_t uniform(std::uint64_t bound)
    {
        const std::uint64_t reject_from = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        for (;;) {
            std::uint64_t v = next_word();
            if (v < reject_from) return v % bound;
        }
    }

private:
    std::array<std::uint8_t, 16> seed_{};
    Digest block_{};
    std::size_t pos_ = 4;
    std::uint64_t counter_ = 0;
};

/// First min(k, d) entries of a Fisher-Yates shuffle of [0, d) keyed by
/// c1_seed (step i swaps position i with i + uniform(d - i)); coefficient j is
/// hash_to_scalar("chal-coef", c2_seed || j). Only the touched positions of the
/// permutation are materialised.
template <class Suite>
ChallengeSet<Suite> expand_challenge(const Challenge<Suite>& ch, std::uint64_t d, std::uint64_t k)
{
    require(d >= 1 && k >= 1, ErrorCode::ParamMismatch, "challenge expansion needs d >= 1 and k >= 1");
    const std::uint64_t count = std::min(k, d);
    ChallengeSet<Suite> cs;
    cs.indices.reserve(static_cast<std::size_t>(count));
    cs.coefficients.reserve(static_cast<std::size_t>(count));

    PrpStream stream(ch.c1_seed);
    std::unordered_map<std::uint64_t, std::uint64_t> displaced;
    auto at = [&](std::uint64_t pos) {
        auto it = displaced.find(pos);
        return it == displaced.end() ? pos : it->second;
    };
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t j = i + stream.uniform(d - i);
        std::uint64_t vi = at(i), vj = at(j);
        displaced[j] = vi;
        cs.indices.push_back(vj);
    }
    for (std::uint64_t j = 0; j < count; ++j) {
        Bytes msg(ch.c2_seed.begin(), ch.c2_seed.end());
        put_u64_be(msg, j);
        cs.coefficients.push_back(Suite::hash_to_scalar("chal-coef", msg));
    }
    return cs;
}

} // namespace dsaudit
