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

#include "dsaudit/algebra/field.hpp"

namespace dsaudit::algebra::bn254 {

struct FpParams {
    static constexpr U256 modulus = {0x3c208c16d87cfd47ULL, 0x97816a916871ca8dULL, 0xb85045b68181585dULL,
                                     0x30644e72e131a029ULL};
};

/// Scalar field: the order of G1, G2 and GT.
struct FrParams {
    static constexpr U256 modulus = {0x43e1f593f0000001ULL, 0x2833e84879b97091ULL, 0xb85045b68181585dULL,
                                     0x30644e72e131a029ULL};
};

using Fp = MontField<FpParams>;
using Fr = MontField<FrParams>;

/// Fp[u] / (u^2 + 1)
struct Fp2 {
    Fp c0, c1;

    static constexpr Fp2 zero() { return {}; }
    static constexpr Fp2 one() { return {Fp::one(), Fp::zero()}; }

    constexpr bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    friend constexpr bool operator==(const Fp2&, const Fp2&) = default;

    friend constexpr Fp2 operator+(const Fp2& a, const Fp2& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
    friend constexpr Fp2 operator-(const Fp2& a, const Fp2& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
    constexpr Fp2 operator-() const { return {-c0, -c1}; }

    friend constexpr Fp2 operator*(const Fp2& a, const Fp2& b)
    {
        Fp v0 = a.c0 * b.c0;
        Fp v1 = a.c1 * b.c1;
        return {v0 - v1, (a.c0 + a.c1) * (b.c0 + b.c1) - v0 - v1};
    }

    friend constexpr Fp2 operator*(const Fp2& a, const Fp& k) { return {a.c0 * k, a.c1 * k}; }

    Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
    Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
    Fp2& operator*=(const Fp2& o) { return *this = *this * o; }

    constexpr Fp2 square() const
    {
        Fp a = c0 + c1;
        Fp b = c0 - c1;
        Fp c = c0 * c1;
        return {a * b, c + c};
    }

    constexpr Fp2 dbl() const { return {c0.dbl(), c1.dbl()}; }
    constexpr Fp2 conjugate() const { return {c0, -c1}; }

    /// Multiplication by the non-residue xi = 9 + u.
    constexpr Fp2 mul_by_xi() const
    {
        Fp t0 = c0.dbl().dbl().dbl() + c0;
        Fp t1 = c1.dbl().dbl().dbl() + c1;
        return {t0 - c1, t1 + c0};
    }

    Fp2 inverse() const
    {
        Fp norm_inv = (c0.square() + c1.square()).inverse();
        return {c0 * norm_inv, -(c1 * norm_inv)};
    }

    template <std::size_t N>
    Fp2 pow(const Limbs<N>& exp) const
    {
        Fp2 acc = one();
        for (std::size_t i = bit_length(exp); i-- > 0;) {
            acc = acc.square();
            if (test_bit(exp, i)) acc *= *this;
        }
        return acc;
    }

    /// Lexicographic order with the imaginary part most significant.
    bool is_lexicographically_largest() const
    {
        if (!c1.is_zero()) return c1.is_lexicographically_largest();
        return c0.is_lexicographically_largest();
    }

    std::optional<Fp2> sqrt() const
    {
        if (is_zero()) return zero();
        // p = 3 mod 4 (Adj & Rodriguez-Henriquez, algorithm 9)
        U256 e1 = sub_small(Fp::modulus, 3);
        div_small(e1, 4);
        Fp2 a1 = pow(e1);
        Fp2 alpha = a1.square() * *this;
        Fp2 x0 = a1 * *this;
        Fp2 candidate;
        if (alpha == -one()) {
            candidate = Fp2{Fp::zero(), Fp::one()} * x0;
        } else {
            U256 e2 = sub_small(Fp::modulus, 1);
            div_small(e2, 2);
            candidate = (one() + alpha).pow(e2) * x0;
        }
        if (candidate.square() == *this) return candidate;
        return std::nullopt;
    }
};

/// Fp2[v] / (v^3 - xi)
struct Fp6 {
    Fp2 c0, c1, c2;

    static constexpr Fp6 zero() { return {}; }
    static constexpr Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

    constexpr bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
    friend constexpr bool operator==(const Fp6&, const Fp6&) = default;

    friend constexpr Fp6 operator+(const Fp6& a, const Fp6& b) { return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2}; }
    friend constexpr Fp6 operator-(const Fp6& a, const Fp6& b) { return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2}; }
    constexpr Fp6 operator-() const { return {-c0, -c1, -c2}; }

    friend constexpr Fp6 operator*(const Fp6& a, const Fp6& b)
    {
        Fp2 v0 = a.c0 * b.c0;
        Fp2 v1 = a.c1 * b.c1;
        Fp2 v2 = a.c2 * b.c2;
        Fp2 t0 = ((a.c1 + a.c2) * (b.c1 + b.c2) - v1 - v2).mul_by_xi() + v0;
        Fp2 t1 = (a.c0 + a.c1) * (b.c0 + b.c1) - v0 - v1 + v2.mul_by_xi();
        Fp2 t2 = (a.c0 + a.c2) * (b.c0 + b.c2) - v0 - v2 + v1;
        return {t0, t1, t2};
    }

    friend constexpr Fp6 operator*(const Fp6& a, const Fp2& k) { return {a.c0 * k, a.c1 * k, a.c2 * k}; }

    Fp6& operator+=(const Fp6& o) { return *this = *this + o; }
    Fp6& operator-=(const Fp6& o) { return *this = *this - o; }
    Fp6& operator*=(const Fp6& o) { return *this = *this * o; }

    constexpr Fp6 square() const { return *this * *this; }

    /// Multiplication by v.
    constexpr Fp6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

    Fp6 inverse() const
    {
        Fp2 t0 = c0.square() - (c1 * c2).mul_by_xi();
        Fp2 t1 = c2.square().mul_by_xi() - c0 * c1;
        Fp2 t2 = c1.square() - c0 * c2;
        Fp2 den = c0 * t0 + (c2 * t1).mul_by_xi() + (c1 * t2).mul_by_xi();
        Fp2 inv = den.inverse();
        return {t0 * inv, t1 * inv, t2 * inv};
    }
};

/// Fp6[w] / (w^2 - v); equivalently Fp2[w] / (w^6 - xi).
struct Fp12 {
    Fp6 c0, c1;

    static constexpr Fp12 zero() { return {}; }
    static constexpr Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

    constexpr bool is_one() const { return c0 == Fp6::one() && c1.is_zero(); }
    friend constexpr bool operator==(const Fp12&, const Fp12&) = default;

    friend constexpr Fp12 operator*(const Fp12& a, const Fp12& b)
    {
        Fp6 v0 = a.c0 * b.c0;
        Fp6 v1 = a.c1 * b.c1;
        return {v0 + v1.mul_by_v(), (a.c0 + a.c1) * (b.c0 + b.c1) - v0 - v1};
    }

    Fp12& operator*=(const Fp12& o) { return *this = *this * o; }

    Fp12 square() const
    {
        Fp6 ab = c0 * c1;
        Fp6 t = (c0 + c1) * (c0 + c1.mul_by_v());
        return {t - ab - ab.mul_by_v(), ab + ab};
    }

    /// Frobenius p^6, which inverts elements of the cyclotomic subgroup.
    constexpr Fp12 conjugate() const { return {c0, -c1}; }

    Fp12 inverse() const
    {
        Fp6 den = (c0.square() - c1.square().mul_by_v()).inverse();
        return {c0 * den, -(c1 * den)};
    }

    /// Coefficient of w^k for k in [0, 6).
    const Fp2& coeff(int k) const
    {
        const Fp6& half = (k % 2 == 0) ? c0 : c1;
        int idx = k / 2;
        return idx == 0 ? half.c0 : (idx == 1 ? half.c1 : half.c2);
    }

    Fp2& coeff(int k)
    {
        Fp6& half = (k % 2 == 0) ? c0 : c1;
        int idx = k / 2;
        return idx == 0 ? half.c0 : (idx == 1 ? half.c1 : half.c2);
    }

    /// x -> x^(p^power)
    Fp12 frobenius(int power) const
    {
        Fp12 out = *this;
        for (int i = 0; i < power; ++i) out = out.frobenius_once();
        return out;
    }

    template <std::size_t N>
    Fp12 pow(const Limbs<N>& exp) const
    {
        Fp12 table[16];
        table[0] = one();
        for (int i = 1; i < 16; ++i) table[i] = table[i - 1] * *this;
        Fp12 acc = one();
        std::size_t windows = (bit_length(exp) + 3) / 4;
        for (std::size_t w = windows; w-- > 0;) {
            acc = acc.square().square().square().square();
            auto digit = bits_at(exp, 4 * w, 4);
            if (digit != 0) acc *= table[digit];
        }
        return acc;
    }

private:
    struct FrobeniusTable {
        Fp2 gamma[6];
        FrobeniusTable()
        {
            // gamma_k = xi^(k (p - 1) / 6)
            U256 e = sub_small(Fp::modulus, 1);
            div_small(e, 6);
            Fp2 base = Fp2{Fp::from_u64(9), Fp::one()}.pow(e);
            gamma[0] = Fp2::one();
            for (int k = 1; k < 6; ++k) gamma[k] = gamma[k - 1] * base;
        }
    };

    Fp12 frobenius_once() const
    {
        static const FrobeniusTable table;
        Fp12 out;
        for (int k = 0; k < 6; ++k) out.coeff(k) = coeff(k).conjugate() * table.gamma[k];
        return out;
    }
};

} // namespace dsaudit::algebra::bn254
