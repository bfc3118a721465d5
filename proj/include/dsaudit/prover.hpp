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

#include <vector>

#include "dsaudit/challenge.hpp"
#include "dsaudit/keys.hpp"

namespace dsaudit {

/// P_k(x) = sum over challenged i of c_i * M_i(x), lowest degree first.
template <class Suite>
struct CombinedPolynomial {
    std::vector<typename Suite::Scalar> coefficients;

    typename Suite::Scalar operator()(const typename Suite::Scalar& x) const
    {
        return chunk_polynomial_eval<typename Suite::Scalar>(coefficients, x);
    }

    friend bool operator==(const CombinedPolynomial&, const CombinedPolynomial&) = default;
};

template <class Suite>
struct PolyQuotient {
    std::vector<typename Suite::Scalar> quotient; ///< s - 1 coefficients
    typename Suite::Scalar remainder;             ///< P(r)
};

/// sigma || y || psi, the proof of the unblinded protocol. Publishing y leaks
/// P_k(r); kept for the insecure demo and the attack module only.
template <class Suite>
struct NonPrivateProof {
    typename Suite::G1 sigma;
    typename Suite::Scalar y;
    typename Suite::G1 psi;

    static constexpr std::size_t wire_bytes = 2 * Suite::g1_bytes + Suite::scalar_bytes;

    Bytes to_bytes() const
    {
        Bytes out = Suite::encode(sigma);
        append(out, Suite::encode(y));
        append(out, Suite::encode(psi));
        return out;
    }

    static NonPrivateProof from_bytes(ByteSpan in)
    {
        require(in.size() == wire_bytes, ErrorCode::WrongLength,
                "proof must be " + std::to_string(wire_bytes) + " bytes, got " + std::to_string(in.size()));
        ByteReader r(in);
        NonPrivateProof p;
        p.sigma = Suite::read_g1(r.take(Suite::g1_bytes));
        p.y = Suite::read_scalar(r.take(Suite::scalar_bytes));
        p.psi = Suite::read_g1(r.take(Suite::g1_bytes));
        return p;
    }
};

/// sigma || y' || psi || R: the on-chain audit trail.
template <class Suite>
struct AuditProof {
    typename Suite::G1 sigma;
    typename Suite::Scalar y_prime;
    typename Suite::G1 psi;
    typename Suite::Gt R;

    static constexpr std::size_t wire_bytes = 2 * Suite::g1_bytes + Suite::scalar_bytes + Suite::gt_bytes;

    Bytes to_bytes() const
    {
        Bytes out = Suite::encode(sigma);
        append(out, Suite::encode(y_prime));
        append(out, Suite::encode(psi));
        append(out, Suite::encode(R));
        return out;
    }

    static AuditProof from_bytes(ByteSpan in)
    {
        require(in.size() == wire_bytes, ErrorCode::WrongLength,
                "proof must be " + std::to_string(wire_bytes) + " bytes, got " + std::to_string(in.size()));
        ByteReader r(in);
        AuditProof p;
        p.sigma = Suite::read_g1(r.take(Suite::g1_bytes));
        p.y_prime = Suite::read_scalar(r.take(Suite::scalar_bytes));
        p.psi = Suite::read_g1(r.take(Suite::g1_bytes));
        p.R = Suite::read_gt(r.take(Suite::gt_bytes));
        return p;
    }
};

template <class Suite>
CombinedPolynomial<Suite> combine_chunks(const FileEncoding<Suite>& enc, const ChallengeSet<Suite>& cs)
{
    CombinedPolynomial<Suite> p{std::vector<typename Suite::Scalar>(enc.s, Suite::Scalar::zero())};
    for (std::size_t t = 0; t < cs.size(); ++t) {
        require(cs.indices[t] < enc.d, ErrorCode::IndexOutOfRange,
                "challenged chunk " + std::to_string(cs.indices[t]) + " is outside [0, " + std::to_string(enc.d) + ")");
        auto chunk = enc.chunk(cs.indices[t]);
        for (std::size_t j = 0; j < enc.s; ++j) p.coefficients[j] += cs.coefficients[t] * chunk[j];
    }
    return p;
}

/// Synthetic division of P by (x - r).
template <class Suite>
PolyQuotient<Suite> poly_quotient(const CombinedPolynomial<Suite>& p, const typename Suite::Scalar& r)
{
    PolyQuotient<Suite> out;
    const auto& c = p.coefficients;
    if (c.empty()) {
        out.remainder = Suite::Scalar::zero();
        return out;
    }
    out.quotient.resize(c.size() - 1);
    auto acc = c.back();
    for (std::size_t j = c.size() - 1; j-- > 0;) {
        out.quotient[j] = acc;
        acc = c[j] + acc * r;
    }
    out.remainder = acc;
    return out;
}

namespace detail {

template <class Suite>
void check_proving_inputs(const PublicKey<Suite>& pk, const FileEncoding<Suite>& enc, const TagSet<Suite>& tags)
{
    check_width(pk, enc);
    require(tags.sigmas.size() == enc.d, ErrorCode::ParamMismatch,
            std::to_string(tags.sigmas.size()) + " tags for " + std::to_string(enc.d) + " chunks");
    require(tags.name == enc.name, ErrorCode::ParamMismatch, "tags belong to a different file name");
}

template <class Suite>
NonPrivateProof<Suite> prove_core(const PublicKey<Suite>& pk, const FileEncoding<Suite>& enc, const TagSet<Suite>& tags,
                                  const Challenge<Suite>& ch, const ChallengeSet<Suite>& cs)
{
    check_proving_inputs(pk, enc, tags);
    auto poly = combine_chunks(enc, cs);
    std::vector<typename Suite::G1> chosen;
    chosen.reserve(cs.size());
    for (auto i : cs.indices) chosen.push_back(tags.sigmas[static_cast<std::size_t>(i)]);

    auto q = poly_quotient(poly, ch.r);
    NonPrivateProof<Suite> p;
    p.sigma = Suite::msm(chosen, cs.coefficients).to_affine();
    p.y = q.remainder;
    // psi = Q(alpha) * g1 from the public powers alone
    p.psi = Suite::msm(std::span<const typename Suite::G1>(pk.alpha_powers).first(q.quotient.size()), q.quotient).to_affine();
    return p;
}

} // namespace detail

template <class Suite>
NonPrivateProof<Suite> prove_nonprivate(const PublicKey<Suite>& pk, const FileEncoding<Suite>& enc,
                                        const TagSet<Suite>& tags, const Challenge<Suite>& ch,
                                        const ChallengeSet<Suite>& cs)
{
    return detail::prove_core(pk, enc, tags, ch, cs);
}

/// The private proof together with the values it hides, for white-box checks.
template <class Suite>
struct BlindedProof {
    AuditProof<Suite> proof;
    typename Suite::Scalar y;    ///< P_k(r)
    typename Suite::Scalar z;    ///< blinding
    typename Suite::Scalar zeta; ///< H'(R)
};

/// Private proof with a caller-chosen blinding z: R = pairing_base^z,
/// zeta = H'(R), y' = zeta * P_k(r) + z.
template <class Suite>
BlindedProof<Suite> prove_private_with_blinding(const PublicKey<Suite>& pk, const FileEncoding<Suite>& enc,
                                                const TagSet<Suite>& tags, const Challenge<Suite>& ch,
                                                const ChallengeSet<Suite>& cs, const typename Suite::Scalar& z)
{
    auto core = detail::prove_core(pk, enc, tags, ch, cs);
    BlindedProof<Suite> out;
    out.y = core.y;
    out.z = z;
    out.proof.sigma = core.sigma;
    out.proof.psi = core.psi;
    out.proof.R = pk.pairing_base.pow(z);
    out.zeta = Suite::hash_gt_to_scalar(out.proof.R);
    out.proof.y_prime = out.zeta * core.y + z;
    return out;
}

template <class Suite>
AuditProof<Suite> prove_private(const PublicKey<Suite>& pk, const FileEncoding<Suite>& enc, const TagSet<Suite>& tags,
                                const Challenge<Suite>& ch, const ChallengeSet<Suite>& cs, RandomSource& rng)
{
    return prove_private_with_blinding(pk, enc, tags, ch, cs, Suite::Scalar::random(rng)).proof;
}

} // namespace dsaudit
