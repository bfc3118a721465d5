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

#include <stdexcept>

#include "dsaudit/algebra/curve.hpp"
#include "dsaudit/algebra/tower.hpp"

namespace dsaudit::algebra {

template <std::size_t N>
constexpr Limbs<N> parse_hex(const char* hex)
{
    Limbs<N> out{};
    std::size_t len = 0;
    while (hex[len] != '\0') ++len;
    std::size_t bit = 0;
    for (std::size_t i = len; i-- > 0;) {
        char c = hex[i];
        std::uint64_t v = (c >= '0' && c <= '9') ? static_cast<std::uint64_t>(c - '0')
                                                 : static_cast<std::uint64_t>((c | 0x20) - 'a' + 10);
        out[bit / 64] |= v << (bit % 64);
        bit += 4;
    }
    return out;
}

} // namespace dsaudit::algebra

namespace dsaudit::algebra::bn254 {

/// BN curve parameter u; the optimal ate loop runs over 6u + 2.
inline constexpr std::uint64_t bn_u = 4965661367192848881ULL;
inline constexpr Limbs<2> ate_loop_count = {0x9d797039be763ba8ULL, 0x1ULL};

struct G1Curve {
    using Field = Fp;
    static Fp b() { return Fp::from_u64(3); }
    static Affine<G1Curve> generator() { return Affine<G1Curve>::from_xy(Fp::from_u64(1), Fp::from_u64(2)); }
};

/// Sextic D-type twist y^2 = x^3 + 3 / xi over Fp2.
struct G2Curve {
    using Field = Fp2;
    static Fp2 b()
    {
        static const Fp2 value = Fp2{Fp::from_u64(3), Fp::zero()} * Fp2{Fp::from_u64(9), Fp::one()}.inverse();
        return value;
    }
    static Affine<G2Curve> generator()
    {
        static const Affine<G2Curve> g = Affine<G2Curve>::from_xy(
            Fp2{Fp::from_canonical(parse_hex<4>("1800deef121f1e76426a00665e5c4479674322d4f75edadd46debd5cd992f6ed")),
                Fp::from_canonical(parse_hex<4>("198e9393920d483a7260bfb731fb5d25f1aa493335a9e71297e485b7aef312c2"))},
            Fp2{Fp::from_canonical(parse_hex<4>("12c85ea5db8c6deb4aab71808dcb408fe3d1e7690c43d37b4ce6cc0166fa7daa")),
                Fp::from_canonical(parse_hex<4>("090689d0585ff075ec9e99ad690c3395bc4b313370b38ef355acdadcd122975b"))});
        return g;
    }
};

using G1Affine = Affine<G1Curve>;
using G2Affine = Affine<G2Curve>;
using G1 = Jacobian<G1Curve>;
using G2 = Jacobian<G2Curve>;

namespace glv {

// phi(x, y) = (beta x, y) acts on G1 as multiplication by lambda.
inline const Fp& beta()
{
    static const Fp b = Fp::from_canonical(parse_hex<4>("59e26bcea0d48bacd4f263f1acdb5c4f5763473177fffffe"));
    return b;
}

// Rounded lattice basis: k = k1 + k2 lambda (mod r) with |k1|, |k2| < 2^127.
inline constexpr U256 g1_round = parse_hex<4>("2d91d232ec7e0b3d7");
inline constexpr U256 g2_round = parse_hex<4>("24ccef014a773d2cf7a7bd9d4391eb18d");
inline constexpr U256 a1 = parse_hex<4>("89d3256894d213e3");
inline constexpr U256 minus_b1 = parse_hex<4>("6f4d8248eeb859fc8211bbeb7d4f1128");
inline constexpr U256 a2 = parse_hex<4>("6f4d8248eeb859fd0be4e1541221250b");

// floor(a * b / 2^256)
inline U256 mul_high(const U256& a, const U256& b)
{
    std::uint64_t prod[8] = {};
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 carry = 0;
        for (int j = 0; j < 4; ++j) {
            unsigned __int128 cur = static_cast<unsigned __int128>(a[i]) * b[j] + prod[i + j] + carry;
            prod[i + j] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        prod[i + 4] = static_cast<std::uint64_t>(carry);
    }
    return U256{prod[4], prod[5], prod[6], prod[7]};
}

struct HalfScalar {
    unsigned __int128 magnitude;
    bool negative;
};

inline HalfScalar to_half(const Fr& v)
{
    auto fits = [](const U256& x) { return x[2] == 0 && x[3] == 0; };
    auto wide = [](const U256& x) { return (static_cast<unsigned __int128>(x[1]) << 64) | x[0]; };
    U256 pos = v.to_canonical();
    if (fits(pos)) return {wide(pos), false};
    U256 neg = (-v).to_canonical();
    if (!fits(neg)) throw std::logic_error("glv: decomposition out of range");
    return {wide(neg), true};
}

inline G1 mul(const G1& p, const Fr& k)
{
    const U256 kc = k.to_canonical();
    const U256 c1 = mul_high(kc, g1_round);
    const U256 c2 = mul_high(kc, g2_round);
    const Fr f1 = Fr::from_canonical(c1), f2 = Fr::from_canonical(c2);
    // b2 = a1
    const Fr k1 = k - f1 * Fr::from_canonical(a1) - f2 * Fr::from_canonical(a2);
    const Fr k2 = f1 * Fr::from_canonical(minus_b1) - f2 * Fr::from_canonical(a1);
    const HalfScalar h1 = to_half(k1), h2 = to_half(k2);
    G1 q = p.scale_x(beta());
    return G1::mul_two(h1.negative ? -p : p, h1.magnitude, h2.negative ? -q : q, h2.magnitude);
}

} // namespace glv

inline G1 operator*(const G1& p, const Fr& k) { return glv::mul(p, k); }
inline G2 operator*(const G2& p, const Fr& k) { return p.mul(k.to_canonical()); }

/// Membership in the order-r subgroup of the twist.
inline bool g2_in_subgroup(const G2Affine& q) { return G2(q).mul(Fr::modulus).is_identity(); }

} // namespace dsaudit::algebra::bn254
