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

#include <string>
#include <string_view>

#include "dsaudit/algebra/codec.hpp"
#include "dsaudit/algebra/counters.hpp"
#include "dsaudit/common/sha256.hpp"

namespace dsaudit::algebra::bn254 {

/// expand_message_xmd with SHA-256 (RFC 9380, section 5.3.1).
inline Bytes expand_message_xmd(ByteSpan msg, std::string_view dst, std::size_t len_in_bytes)
{
    constexpr std::size_t b_in_bytes = 32;
    constexpr std::size_t s_in_bytes = 64;
    const std::size_t ell = (len_in_bytes + b_in_bytes - 1) / b_in_bytes;
    if (ell > 255 || len_in_bytes > 65535 || dst.size() > 255) {
        throw std::invalid_argument("expand_message_xmd: requested output or DST too long");
    }
    Bytes dst_prime(dst.begin(), dst.end());
    dst_prime.push_back(static_cast<std::uint8_t>(dst.size()));

    const std::uint8_t zero_pad[s_in_bytes] = {};
    const std::uint8_t lib_str[2] = {static_cast<std::uint8_t>(len_in_bytes >> 8),
                                     static_cast<std::uint8_t>(len_in_bytes & 0xff)};
    Digest b0 = Sha256()
                    .update(ByteSpan(zero_pad, s_in_bytes))
                    .update(msg)
                    .update(ByteSpan(lib_str, 2))
                    .update_u8(0)
                    .update(dst_prime)
                    .finish();
    Digest bi = Sha256().update(b0).update_u8(1).update(dst_prime).finish();

    Bytes out;
    out.reserve(ell * b_in_bytes);
    append(out, bi);
    for (std::size_t i = 2; i <= ell; ++i) {
        Digest mixed;
        for (std::size_t j = 0; j < b_in_bytes; ++j) mixed[j] = b0[j] ^ bi[j];
        bi = Sha256().update(mixed).update_u8(static_cast<std::uint8_t>(i)).update(dst_prime).finish();
        append(out, bi);
    }
    out.resize(len_in_bytes);
    return out;
}

/// Protocol-wide domain separation prefixes.
inline std::string g1_dst(std::string_view domain_tag)
{
    return "DSAUDIT-V01-" + std::string(domain_tag) + "-BN254G1_XMD:SHA-256_SVDW_RO_";
}

inline std::string scalar_dst(std::string_view domain_tag)
{
    return "DSAUDIT-V01-" + std::string(domain_tag) + "-BN254FR_XMD:SHA-256_WIDE_";
}

namespace detail {

struct SvdwConstants {
    // Z = 1, A = 0, B = 3
    Fp z = Fp::one();
    Fp c1, c2, c3, c4;
    SvdwConstants()
    {
        Fp b = G1Curve::b();
        Fp gz = z.square() * z + b;
        Fp three_z2 = z.square() * Fp::from_u64(3);
        c1 = gz;
        c2 = -(z * Fp::from_u64(2).inverse());
        Fp t = (-(gz * three_z2)).sqrt().value();
        c3 = t.is_odd() ? -t : t;
        c4 = -(gz * Fp::from_u64(4)) * three_z2.inverse();
    }
};

inline const SvdwConstants& svdw()
{
    static const SvdwConstants c;
    return c;
}

inline Fp curve_rhs(const Fp& x) { return x.square() * x + G1Curve::b(); }

} // namespace detail

/// Shallue-van de Woestijne map to E(Fp) (RFC 9380, section 6.6.1).
inline G1Affine map_to_curve_svdw(const Fp& u)
{
    const auto& k = detail::svdw();
    Fp tv1 = u.square() * k.c1;
    Fp tv2 = Fp::one() + tv1;
    tv1 = Fp::one() - tv1;
    Fp tv3 = (tv1 * tv2).inverse();
    Fp tv4 = u * tv1 * tv3 * k.c3;
    Fp x1 = k.c2 - tv4;
    Fp x2 = k.c2 + tv4;
    Fp x3 = tv2.square() * tv3;
    x3 = x3.square() * k.c4 + k.z;

    Fp x = x3;
    if (Fp gx = detail::curve_rhs(x1); gx.is_square()) {
        x = x1;
    } else if (gx = detail::curve_rhs(x2); gx.is_square()) {
        x = x2;
    }
    Fp yy = detail::curve_rhs(x).sqrt().value();
    if (u.is_odd() != yy.is_odd()) yy = -yy;
    return G1Affine::from_xy(x, yy);
}

/// hash_to_field for Fp with L = 48 (k = 128).
inline std::array<Fp, 2> hash_to_fp2_elements(ByteSpan msg, std::string_view dst)
{
    Bytes uniform = expand_message_xmd(msg, dst, 96);
    return {Fp::from_wide_be(ByteSpan(uniform).subspan(0, 48)), Fp::from_wide_be(ByteSpan(uniform).subspan(48, 48))};
}

/// Random-oracle hash onto G1; distinct domain tags give independent oracles.
inline G1Affine hash_to_g1(std::string_view domain_tag, ByteSpan msg)
{
    ++op_counters().hash_to_g1;
    auto u = hash_to_fp2_elements(msg, g1_dst(domain_tag));
    G1 q = G1(map_to_curve_svdw(u[0])).add_affine(map_to_curve_svdw(u[1]));
    return q.to_affine();
}

/// Wide reduction of a 64-byte expansion into Z_r.
inline Fr hash_to_scalar(std::string_view domain_tag, ByteSpan msg)
{
    Bytes uniform = expand_message_xmd(msg, scalar_dst(domain_tag), 64);
    return Fr::from_wide_be(uniform);
}

/// Random oracle GT -> Z_r over the canonical 192-byte encoding.
inline Fr hash_gt_to_scalar(const Gt& x) { return hash_to_scalar("h-prime", codec::encode_gt(x)); }

} // namespace dsaudit::algebra::bn254
