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

#include "dsaudit/prover.hpp"

namespace dsaudit {

/// What the contract knows about an agreement: the owner's public key and the
/// file metadata recorded on chain.
template <class Suite>
struct VerificationContext {
    PublicKey<Suite> pk;
    typename Suite::Scalar name;
    std::uint64_t d = 0;
    std::uint64_t k = 0;
};

/// chi = sum_i c_i * H(name || i) over the challenged indices.
template <class Suite>
typename Suite::G1 compute_chi(const VerificationContext<Suite>& ctx, const ChallengeSet<Suite>& cs)
{
    for (auto i : cs.indices) {
        require(i < ctx.d, ErrorCode::IndexOutOfRange,
                "challenged chunk " + std::to_string(i) + " is outside [0, " + std::to_string(ctx.d) + ")");
    }
    std::vector<typename Suite::G1> points(cs.size());
    parallel_for(
        points.size(),
        [&](std::size_t begin, std::size_t end) {
            for (std::size_t j = begin; j < end; ++j) points[j] = index_point<Suite>(ctx.name, cs.indices[j]);
        },
        16);
    return Suite::msm(points, cs.coefficients).to_affine();
}

namespace detail {

/// delta - r * epsilon, prepared for the Miller loop.
template <class Suite>
typename Suite::G2Prepared shifted_delta(const PublicKey<Suite>& pk, const typename Suite::Scalar& r)
{
    return typename Suite::G2Prepared((typename Suite::G2Proj(pk.delta) + Suite::mul(pk.epsilon, -r)).to_affine());
}

} // namespace detail

/// e(sigma, g2) e(-y g1, epsilon) = e(chi, epsilon) e(psi, delta - r epsilon)
template <class Suite>
bool verify_nonprivate(const VerificationContext<Suite>& ctx, const Challenge<Suite>& ch, const ChallengeSet<Suite>& cs,
                       const NonPrivateProof<Suite>& prf)
{
    using G1 = typename Suite::G1;
    using Prepared = typename Suite::G2Prepared;
    auto chi = compute_chi(ctx, cs);
    auto shifted = detail::shifted_delta(ctx.pk, ch.r);
    std::pair<G1, const Prepared*> lhs[2] = {{prf.sigma, Suite::g2_prepared().get()},
                                             {Suite::mul_g1(-prf.y).to_affine(), ctx.pk.epsilon_prepared.get()}};
    std::pair<G1, const Prepared*> rhs[2] = {{chi, ctx.pk.epsilon_prepared.get()}, {prf.psi, &shifted}};
    return Suite::multi_pairing(lhs) == Suite::multi_pairing(rhs);
}

template <class Suite>
bool verify_nonprivate(const VerificationContext<Suite>& ctx, const Challenge<Suite>& ch, const ChallengeSet<Suite>& cs,
                       ByteSpan proof_bytes)
{
    return verify_nonprivate(ctx, ch, cs, NonPrivateProof<Suite>::from_bytes(proof_bytes));
}

/// Both sides of the private verification equation
///   R e(zeta sigma, g2) e(-y' g1, epsilon) = e(zeta chi, epsilon) e(zeta psi, delta - r epsilon)
/// with zeta = H'(R) recomputed from the submitted R.
template <class Suite>
struct PrivateEquation {
    typename Suite::Gt lhs;
    typename Suite::Gt rhs;
    typename Suite::Scalar zeta;

    bool holds() const { return lhs == rhs; }
};

template <class Suite>
PrivateEquation<Suite> evaluate_private_equation(const VerificationContext<Suite>& ctx, const Challenge<Suite>& ch,
                                                 const ChallengeSet<Suite>& cs, const AuditProof<Suite>& prf)
{
    using G1 = typename Suite::G1;
    using Prepared = typename Suite::G2Prepared;
    PrivateEquation<Suite> eq;
    eq.zeta = Suite::hash_gt_to_scalar(prf.R);
    auto chi = compute_chi(ctx, cs);
    auto shifted = detail::shifted_delta(ctx.pk, ch.r);

    std::pair<G1, const Prepared*> lhs[2] = {{Suite::mul(prf.sigma, eq.zeta).to_affine(), Suite::g2_prepared().get()},
                                             {Suite::mul_g1(-prf.y_prime).to_affine(), ctx.pk.epsilon_prepared.get()}};
    std::pair<G1, const Prepared*> rhs[2] = {{Suite::mul(chi, eq.zeta).to_affine(), ctx.pk.epsilon_prepared.get()},
                                             {Suite::mul(prf.psi, eq.zeta).to_affine(), &shifted}};
    eq.lhs = prf.R * Suite::multi_pairing(lhs);
    eq.rhs = Suite::multi_pairing(rhs);
    return eq;
}

template <class Suite>
bool verify_private(const VerificationContext<Suite>& ctx, const Challenge<Suite>& ch, const ChallengeSet<Suite>& cs,
                    const AuditProof<Suite>& prf)
{
    return evaluate_private_equation(ctx, ch, cs, prf).holds();
}

/// Decodes the 288-byte wire form first; malformed bytes raise InvalidEncoding.
template <class Suite>
bool verify_private(const VerificationContext<Suite>& ctx, const Challenge<Suite>& ch, const ChallengeSet<Suite>& cs,
                    ByteSpan proof_bytes)
{
    return verify_private(ctx, ch, cs, AuditProof<Suite>::from_bytes(proof_bytes));
}

} // namespace dsaudit
