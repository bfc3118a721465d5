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

#include <memory>
#include <vector>

#include "dsaudit/common/parallel.hpp"
#include "dsaudit/encoding.hpp"

namespace dsaudit {

template <class Suite>
struct SecretKey {
    typename Suite::Scalar alpha;
    typename Suite::Scalar x;

    /// suite byte || alpha || x. Stored apart from every public artifact.
    Bytes to_bytes() const
    {
        Bytes out{Suite::id};
        append(out, Suite::encode(alpha));
        append(out, Suite::encode(x));
        return out;
    }

    static SecretKey from_bytes(ByteSpan in)
    {
        ByteReader r(in);
        expect_suite<Suite>(r.u8());
        SecretKey sk{Suite::read_scalar(r.take(Suite::scalar_bytes)), Suite::read_scalar(r.take(Suite::scalar_bytes))};
        r.expect_end();
        require(!sk.alpha.is_zero() && !sk.x.is_zero(), ErrorCode::InvalidEncoding, "secret key components must be nonzero");
        return sk;
    }
};

/// Public parameters: epsilon = x*g2, delta = (alpha x)*g2, the powers
/// alpha^j * g1 for j in [0, s) and the pairing base e(g1, epsilon).
template <class Suite>
struct PublicKey {
    using G1 = typename Suite::G1;
    using G2 = typename Suite::G2;
    using Gt = typename Suite::Gt;

    std::uint32_t s = 0;
    G2 epsilon;
    G2 delta;
    std::vector<G1> alpha_powers;
    Gt pairing_base;

    /// Miller-loop lines for epsilon, shared by every verification.
    std::shared_ptr<const typename Suite::G2Prepared> epsilon_prepared;

    void prepare() { epsilon_prepared = std::make_shared<const typename Suite::G2Prepared>(epsilon); }

    /// suite byte || s (u32 BE) || epsilon || delta || alpha_powers || pairing_base
    Bytes to_bytes() const
    {
        Bytes out{Suite::id};
        put_u32_be(out, s);
        append(out, Suite::encode(epsilon));
        append(out, Suite::encode(delta));
        for (const auto& p : alpha_powers) append(out, Suite::encode(p));
        append(out, Suite::encode(pairing_base));
        return out;
    }

    static PublicKey from_bytes(ByteSpan in)
    {
        ByteReader r(in);
        expect_suite<Suite>(r.u8());
        PublicKey pk;
        pk.s = r.u32();
        require(pk.s >= 1, ErrorCode::InvalidEncoding, "public key with s = 0");
        require(r.remaining() == 2 * Suite::g2_bytes + pk.s * Suite::g1_bytes + Suite::gt_bytes, ErrorCode::WrongLength,
                "public key body does not match s = " + std::to_string(pk.s));
        pk.epsilon = Suite::read_g2(r.take(Suite::g2_bytes));
        pk.delta = Suite::read_g2(r.take(Suite::g2_bytes));
        for (std::uint32_t j = 0; j < pk.s; ++j) pk.alpha_powers.push_back(Suite::read_g1(r.take(Suite::g1_bytes)));
        pk.pairing_base = Suite::read_gt(r.take(Suite::gt_bytes));
        r.expect_end();
        require(!pk.alpha_powers.empty() && pk.alpha_powers[0] == Suite::g1(), ErrorCode::InvalidEncoding,
                "alpha_powers[0] must be the G1 generator");
        pk.prepare();
        return pk;
    }

    /// e(alpha_powers[j+1], epsilon) = e(alpha_powers[j], delta) for all j and
    /// pairing_base = e(g1, epsilon).
    bool well_formed() const
    {
        typename Suite::G2Prepared delta_prep(delta);
        for (std::size_t j = 0; j + 1 < alpha_powers.size(); ++j) {
            std::pair<G1, const typename Suite::G2Prepared*> pairs[2] = {{alpha_powers[j + 1], epsilon_prepared.get()},
                                                                          {-alpha_powers[j], &delta_prep}};
            if (!Suite::multi_pairing(pairs).is_identity()) return false;
        }
        return pairing_base == Suite::pairing(Suite::g1(), epsilon);
    }
};

template <class Suite>
struct KeyPair {
    SecretKey<Suite> sk;
    PublicKey<Suite> pk;
};

template <class Suite>
KeyPair<Suite> keygen(std::uint32_t s, RandomSource& rng)
{
    using Scalar = typename Suite::Scalar;
    require(s >= 1, ErrorCode::ParamMismatch, "blocks per chunk must be at least 1");
    auto nonzero = [&rng] {
        Scalar v;
        do {
            v = Scalar::random(rng);
        } while (v.is_zero());
        return v;
    };
    KeyPair<Suite> kp;
    kp.sk.alpha = nonzero();
    kp.sk.x = nonzero();

    auto& pk = kp.pk;
    pk.s = s;
    pk.epsilon = Suite::mul(Suite::g2(), kp.sk.x).to_affine();
    pk.delta = Suite::mul(Suite::g2(), kp.sk.alpha * kp.sk.x).to_affine();
    std::vector<typename Suite::G1Proj> powers;
    Scalar a = Scalar::one();
    for (std::uint32_t j = 0; j < s; ++j) {
        powers.push_back(Suite::mul_g1(a));
        a *= kp.sk.alpha;
    }
    pk.alpha_powers = Suite::G1Proj::batch_to_affine(powers);
    pk.pairing_base = Suite::pairing(Suite::g1(), pk.epsilon);
    pk.prepare();
    return kp;
}

/// Per-chunk authenticators sigma_i and the file name they are bound to.
template <class Suite>
struct TagSet {
    typename Suite::Scalar name;
    std::vector<typename Suite::G1> sigmas;

    /// suite byte || name || d (u64 BE) || sigma_0 .. sigma_{d-1}
    Bytes to_bytes() const
    {
        Bytes out{Suite::id};
        append(out, Suite::encode(name));
        put_u64_be(out, sigmas.size());
        for (const auto& s : sigmas) append(out, Suite::encode(s));
        return out;
    }

    static TagSet from_bytes(ByteSpan in)
    {
        ByteReader r(in);
        expect_suite<Suite>(r.u8());
        TagSet t;
        t.name = Suite::read_scalar(r.take(Suite::scalar_bytes));
        const std::uint64_t d = r.u64();
        require(r.remaining() == d * Suite::g1_bytes, ErrorCode::WrongLength,
                "tag file declares " + std::to_string(d) + " tags but holds " + std::to_string(r.remaining()) + " bytes");
        t.sigmas.resize(static_cast<std::size_t>(d));
        for (auto& s : t.sigmas) s = Suite::read_g1(r.take(Suite::g1_bytes));
        return t;
    }
};

/// H(name || i): 32-byte big-endian name followed by the 8-byte chunk index.
template <class Suite>
typename Suite::G1 index_point(const typename Suite::Scalar& name, std::uint64_t i)
{
    Bytes msg = Suite::encode(name);
    put_u64_be(msg, i);
    return Suite::hash_to_g1("tag-index", msg);
}

template <class Suite>
void check_width(const PublicKey<Suite>& pk, const FileEncoding<Suite>& enc)
{
    require(enc.s == pk.s, ErrorCode::ParamMismatch,
            "file encoded with s = " + std::to_string(enc.s) + " but key has s = " + std::to_string(pk.s));
    require(pk.alpha_powers.size() == pk.s, ErrorCode::ParamMismatch, "public key powers do not match s");
}

/// sigma_i = x * (M_i(alpha) * g1 + H(name || i)), computed by the owner with
/// the secret alpha.
template <class Suite>
TagSet<Suite> generate_tags(const SecretKey<Suite>& sk, const PublicKey<Suite>& pk, const FileEncoding<Suite>& enc)
{
    check_width(pk, enc);
    std::vector<typename Suite::G1Proj> sigmas(static_cast<std::size_t>(enc.d));
    parallel_for(sigmas.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            auto m_alpha = chunk_polynomial_eval(enc.chunk(i), sk.alpha);
            sigmas[i] = Suite::mul_g1(sk.x * m_alpha) + Suite::mul(index_point<Suite>(enc.name, i), sk.x);
        }
    });
    return TagSet<Suite>{enc.name, Suite::G1Proj::batch_to_affine(sigmas)};
}

/// Provider-side acceptance check of received tags. All d per-chunk equations
///   e(sigma_i, g2) = e(sum_j m_{i,j} alpha_powers[j] + H(name || i), epsilon)
/// are checked at once through a random linear combination whose 128-bit
/// weights are derived from a hash of every input, so a set with any failing
/// equation passes with probability at most 2^-128.
template <class Suite>
bool verify_tags(const PublicKey<Suite>& pk, const FileEncoding<Suite>& enc, const TagSet<Suite>& tags)
{
    using Scalar = typename Suite::Scalar;
    check_width(pk, enc);
    require(tags.sigmas.size() == enc.d, ErrorCode::ParamMismatch,
            std::to_string(tags.sigmas.size()) + " tags for " + std::to_string(enc.d) + " chunks");
    if (!(tags.name == enc.name)) return false;

    Sha256 transcript;
    transcript.update("dsaudit-tag-batch").update(Suite::encode(enc.name));
    for (const auto& s : tags.sigmas) transcript.update(Suite::encode(s));
    for (const auto& m : enc.blocks) transcript.update(Suite::encode(m));
    const Digest seed = transcript.finish();

    const std::size_t d = static_cast<std::size_t>(enc.d);
    std::vector<Scalar> weights(d);
    std::vector<typename Suite::G1> hashes(d);
    parallel_for(d, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            Bytes ctr;
            put_u64_be(ctr, i);
            Digest h = Sha256().update(seed).update(ctr).finish();
            weights[i] = Scalar::from_wide_be(ByteSpan(h).subspan(0, 16));
            hashes[i] = index_point<Suite>(enc.name, i);
        }
    });

    std::vector<Scalar> combined(pk.s, Scalar::zero());
    for (std::size_t i = 0; i < d; ++i) {
        auto chunk = enc.chunk(i);
        for (std::size_t j = 0; j < pk.s; ++j) combined[j] += weights[i] * chunk[j];
    }
    auto lhs = Suite::msm(tags.sigmas, weights).to_affine();
    auto rhs = (Suite::msm(pk.alpha_powers, combined) + Suite::msm(hashes, weights)).to_affine();

    std::pair<typename Suite::G1, const typename Suite::G2Prepared*> pairs[2] = {
        {lhs, Suite::g2_prepared().get()}, {-rhs, pk.epsilon_prepared.get()}};
    return Suite::multi_pairing(pairs).is_identity();
}

} // namespace dsaudit
