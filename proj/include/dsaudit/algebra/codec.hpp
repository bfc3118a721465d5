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

#include <optional>

#include "dsaudit/algebra/pairing.hpp"
#include "dsaudit/common/bytes.hpp"

/// Canonical byte encodings for the reference suite.
///
/// Scalars: 32-byte big-endian, rejected when >= r.
/// G1: 32-byte big-endian x with the top two bits of the first byte used as
///     flags: 01 identity, 10 y is the smaller root, 11 y is the larger root.
/// G2: 64 bytes, x.c1 || x.c0, same flag layout on the first byte.
/// GT: 192 bytes. Elements g = a + b*w of the cyclotomic subgroup are stored
///     as the torus coordinate c = (1 + a) / b in Fp6 (c0.c0, c0.c1, c1.c0,
///     c1.c1, c2.c0, c2.c1, each 32-byte big-endian); the identity is 0x40
///     followed by zeros. Decoding rebuilds g = (c + w) / (c - w) and checks
///     membership in the order-r subgroup.
namespace dsaudit::algebra::bn254::codec {

inline constexpr std::size_t scalar_bytes = 32;
inline constexpr std::size_t g1_bytes = 32;
inline constexpr std::size_t g2_bytes = 64;
inline constexpr std::size_t gt_bytes = 192;

namespace detail {

inline constexpr std::uint8_t flag_mask = 0xc0;
inline constexpr std::uint8_t flag_infinity = 0x40;
inline constexpr std::uint8_t flag_smallest = 0x80;
inline constexpr std::uint8_t flag_largest = 0xc0;

inline void check_length(ByteSpan in, std::size_t expected, const char* what)
{
    if (in.size() != expected) {
        fail(ErrorCode::WrongLength, std::string(what) + " encoding must be " + std::to_string(expected) +
                                         " bytes, got " + std::to_string(in.size()));
    }
}

inline Fp read_fp(ByteSpan in, std::uint8_t mask_first = 0xff)
{
    std::uint8_t buf[32];
    std::copy(in.begin(), in.begin() + 32, buf);
    buf[0] &= mask_first;
    auto v = Fp::from_bytes_be(buf);
    if (!v) fail(ErrorCode::InvalidEncoding, "base-field coordinate is not canonical");
    return *v;
}

inline bool rest_is_zero(ByteSpan in)
{
    if ((in[0] & ~flag_mask) != 0) return false;
    for (std::size_t i = 1; i < in.size(); ++i) {
        if (in[i] != 0) return false;
    }
    return true;
}

} // namespace detail

inline void write_scalar(const Fr& s, std::span<std::uint8_t> out) { s.to_bytes_be(out); }

inline Fr read_scalar(ByteSpan in)
{
    detail::check_length(in, scalar_bytes, "scalar");
    auto v = Fr::from_bytes_be(in);
    if (!v) fail(ErrorCode::InvalidEncoding, "scalar is not below the group order");
    return *v;
}

inline void write_g1(const G1Affine& p, std::span<std::uint8_t> out)
{
    std::fill(out.begin(), out.begin() + g1_bytes, 0);
    if (p.infinity) {
        out[0] = detail::flag_infinity;
        return;
    }
    p.x.to_bytes_be(out.subspan(0, 32));
    out[0] |= p.y.is_lexicographically_largest() ? detail::flag_largest : detail::flag_smallest;
}

inline G1Affine read_g1(ByteSpan in)
{
    detail::check_length(in, g1_bytes, "G1");
    const std::uint8_t flags = in[0] & detail::flag_mask;
    if (flags == detail::flag_infinity) {
        if (!detail::rest_is_zero(in)) fail(ErrorCode::InvalidEncoding, "malformed G1 identity");
        return G1Affine::identity();
    }
    if (flags == 0) fail(ErrorCode::InvalidEncoding, "G1 point is not in compressed form");
    Fp x = detail::read_fp(in, static_cast<std::uint8_t>(~detail::flag_mask));
    auto y = (x.square() * x + G1Curve::b()).sqrt();
    if (!y) fail(ErrorCode::InvalidEncoding, "G1 x-coordinate is not on the curve");
    if (y->is_lexicographically_largest() != (flags == detail::flag_largest)) *y = -*y;
    // cofactor 1: every curve point is in the group
    return G1Affine::from_xy(x, *y);
}

inline void write_g2(const G2Affine& p, std::span<std::uint8_t> out)
{
    std::fill(out.begin(), out.begin() + g2_bytes, 0);
    if (p.infinity) {
        out[0] = detail::flag_infinity;
        return;
    }
    p.x.c1.to_bytes_be(out.subspan(0, 32));
    p.x.c0.to_bytes_be(out.subspan(32, 32));
    out[0] |= p.y.is_lexicographically_largest() ? detail::flag_largest : detail::flag_smallest;
}

inline G2Affine read_g2(ByteSpan in)
{
    detail::check_length(in, g2_bytes, "G2");
    const std::uint8_t flags = in[0] & detail::flag_mask;
    if (flags == detail::flag_infinity) {
        if (!detail::rest_is_zero(in)) fail(ErrorCode::InvalidEncoding, "malformed G2 identity");
        return G2Affine::identity();
    }
    if (flags == 0) fail(ErrorCode::InvalidEncoding, "G2 point is not in compressed form");
    Fp2 x{detail::read_fp(in.subspan(32, 32)), detail::read_fp(in.subspan(0, 32), static_cast<std::uint8_t>(~detail::flag_mask))};
    auto y = (x.square() * x + G2Curve::b()).sqrt();
    if (!y) fail(ErrorCode::InvalidEncoding, "G2 x-coordinate is not on the twist");
    if (y->is_lexicographically_largest() != (flags == detail::flag_largest)) *y = -*y;
    G2Affine q = G2Affine::from_xy(x, *y);
    if (!g2_in_subgroup(q)) fail(ErrorCode::InvalidEncoding, "G2 point outside the prime-order subgroup");
    return q;
}

inline void write_gt(const Gt& g, std::span<std::uint8_t> out)
{
    std::fill(out.begin(), out.begin() + gt_bytes, 0);
    if (g.is_identity()) {
        out[0] = detail::flag_infinity;
        return;
    }
    const Fp12& v = g.value();
    if (v.c1.is_zero()) fail(ErrorCode::InvalidEncoding, "GT element of order two has no torus encoding");
    Fp6 c = (Fp6::one() + v.c0) * v.c1.inverse();
    const Fp* coords[6] = {&c.c0.c0, &c.c0.c1, &c.c1.c0, &c.c1.c1, &c.c2.c0, &c.c2.c1};
    for (int i = 0; i < 6; ++i) coords[i]->to_bytes_be(out.subspan(32 * i, 32));
}

inline Gt read_gt(ByteSpan in)
{
    detail::check_length(in, gt_bytes, "GT");
    if ((in[0] & detail::flag_mask) == detail::flag_infinity) {
        if (!detail::rest_is_zero(in)) fail(ErrorCode::InvalidEncoding, "malformed GT identity");
        return Gt::identity();
    }
    if ((in[0] & detail::flag_mask) != 0) fail(ErrorCode::InvalidEncoding, "unknown GT flag bits");
    Fp f[6];
    for (int i = 0; i < 6; ++i) f[i] = detail::read_fp(in.subspan(32 * i, 32));
    Fp6 c{{f[0], f[1]}, {f[2], f[3]}, {f[4], f[5]}};
    // (c + w)^2 / (c^2 - v) = (c^2 + v + 2 c w) / (c^2 - v)
    Fp6 c2 = c.square();
    Fp6 v = Fp6{Fp2::zero(), Fp2::one(), Fp2::zero()};
    Fp6 den = (c2 - v).inverse();
    Gt g(Fp12{(c2 + v) * den, (c + c) * den});
    if (!gt_in_subgroup(g)) fail(ErrorCode::InvalidEncoding, "GT element outside the order-r subgroup");
    return g;
}

inline Bytes encode_scalar(const Fr& s)
{
    Bytes out(scalar_bytes);
    write_scalar(s, out);
    return out;
}

inline Bytes encode_g1(const G1Affine& p)
{
    Bytes out(g1_bytes);
    write_g1(p, out);
    return out;
}

inline Bytes encode_g2(const G2Affine& p)
{
    Bytes out(g2_bytes);
    write_g2(p, out);
    return out;
}

inline Bytes encode_gt(const Gt& g)
{
    Bytes out(gt_bytes);
    write_gt(g, out);
    return out;
}

} // namespace dsaudit::algebra::bn254::codec
