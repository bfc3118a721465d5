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

#include <bit>

#include <cstdint>
#include <optional>
#include <span>

#include "dsaudit/algebra/bigint.hpp"
#include "dsaudit/common/random.hpp"

namespace dsaudit::algebra {

namespace detail {

constexpr std::uint64_t mont_inv(std::uint64_t p0)
{
    std::uint64_t y = 1;
    for (int i = 0; i < 7; ++i) {
        y *= 2 - p0 * y;
    }
    return ~y + 1;
}

// 2^(256 * power) mod m, power in {1, 2}; m must be below 2^255.
constexpr U256 pow2_mod(const U256& m, int doublings)
{
    U256 x{1, 0, 0, 0};
    for (int i = 0; i < doublings; ++i) {
        add_in_place(x, x);
        if (compare(x, m) >= 0) sub_in_place(x, m);
    }
    return x;
}

} // namespace detail

/// Prime field element in Montgomery form over a 4-limb modulus below 2^255.
/// `Params` supplies `static constexpr U256 modulus`.
template <class Params>
class MontField {
public:
    static constexpr U256 modulus = Params::modulus;
    static constexpr std::uint64_t inv = detail::mont_inv(Params::modulus[0]);
    static constexpr U256 r1 = detail::pow2_mod(Params::modulus, 256);
    static constexpr U256 r2 = detail::pow2_mod(Params::modulus, 512);
    static constexpr std::size_t byte_size = 32;

    constexpr MontField() = default;

    static constexpr MontField zero() { return MontField(); }
    static constexpr MontField one() { return from_raw(r1); }

    static constexpr MontField from_raw(const U256& mont)
    {
        MontField f;
        f.v_ = mont;
        return f;
    }

    /// `value` must already be reduced.
    static constexpr MontField from_canonical(const U256& value)
    {
        return from_raw(value) * from_raw(r2);
    }

    static constexpr MontField from_u64(std::uint64_t v) { return from_canonical(U256{v, 0, 0, 0}); }

    /// Reduces an arbitrary 256-bit integer.
    static constexpr MontField from_u256_reduce(U256 value)
    {
        while (compare(value, modulus) >= 0) sub_in_place(value, modulus);
        return from_canonical(value);
    }

    /// Strict big-endian decoding: rejects values >= modulus.
    static std::optional<MontField> from_bytes_be(std::span<const std::uint8_t> in)
    {
        if (in.size() != byte_size) return std::nullopt;
        U256 v = load_be(in);
        if (compare(v, modulus) >= 0) return std::nullopt;
        return from_canonical(v);
    }

    /// Interprets any number of big-endian bytes (up to 64) as an integer and
    /// reduces it; used for hash outputs, at least 2x the modulus width.
    static MontField from_wide_be(std::span<const std::uint8_t> in)
    {
        std::uint8_t buf[64] = {};
        std::size_t n = in.size() > 64 ? 64 : in.size();
        for (std::size_t i = 0; i < n; ++i) buf[64 - n + i] = in[in.size() - n + i];
        U256 hi = load_be(std::span<const std::uint8_t>(buf, 32));
        U256 lo = load_be(std::span<const std::uint8_t>(buf + 32, 32));
        // hi * 2^256 + lo
        return from_u256_reduce(hi) * from_canonical(r1) + from_u256_reduce(lo);
    }

    static MontField random(RandomSource& rng)
    {
        std::uint8_t buf[64];
        rng.fill(buf);
        return from_wide_be(buf);
    }

    constexpr U256 to_canonical() const
    {
        MontField o = *this * from_raw(U256{1, 0, 0, 0});
        return o.v_;
    }

    void to_bytes_be(std::span<std::uint8_t> out) const
    {
        U256 c = to_canonical();
        for (std::size_t i = 0; i < 32; ++i) {
            out[i] = static_cast<std::uint8_t>(c[3 - i / 8] >> (8 * (7 - i % 8)));
        }
    }

    Bytes to_bytes() const
    {
        Bytes out(32);
        to_bytes_be(out);
        return out;
    }

    constexpr const U256& raw() const { return v_; }
    constexpr bool is_zero() const { return algebra::is_zero(v_); }
    constexpr bool is_one() const { return v_ == r1; }
    constexpr bool is_odd() const { return (to_canonical()[0] & 1) != 0; }

    /// True when the canonical value exceeds (modulus - 1) / 2.
    constexpr bool is_lexicographically_largest() const
    {
        U256 half = modulus;
        div_small(half, 2);
        return compare(to_canonical(), half) > 0;
    }

    friend constexpr bool operator==(const MontField& a, const MontField& b) { return a.v_ == b.v_; }

    friend constexpr MontField operator+(const MontField& a, const MontField& b)
    {
        std::uint64_t s[4];
        std::uint64_t carry = 0;
        for (int i = 0; i < 4; ++i) {
            u128 t = static_cast<u128>(a.v_[i]) + b.v_[i] + carry;
            s[i] = static_cast<std::uint64_t>(t);
            carry = static_cast<std::uint64_t>(t >> 64);
        }
        // both inputs < p < 2^255, so the sum fits in four limbs
        std::uint64_t d[4];
        std::uint64_t borrow = 0;
        for (int i = 0; i < 4; ++i) {
            u128 t = static_cast<u128>(s[i]) - modulus[i] - borrow;
            d[i] = static_cast<std::uint64_t>(t);
            borrow = static_cast<std::uint64_t>(t >> 64) & 1;
        }
        const std::uint64_t keep = ~std::uint64_t{0} * borrow;
        MontField out;
        for (int i = 0; i < 4; ++i) out.v_[i] = (s[i] & keep) | (d[i] & ~keep);
        return out;
    }

    friend constexpr MontField operator-(const MontField& a, const MontField& b)
    {
        std::uint64_t d[4];
        std::uint64_t borrow = 0;
        for (int i = 0; i < 4; ++i) {
            u128 t = static_cast<u128>(a.v_[i]) - b.v_[i] - borrow;
            d[i] = static_cast<std::uint64_t>(t);
            borrow = static_cast<std::uint64_t>(t >> 64) & 1;
        }
        const std::uint64_t mask = ~std::uint64_t{0} * borrow;
        std::uint64_t carry = 0;
        MontField out;
        for (int i = 0; i < 4; ++i) {
            u128 t = static_cast<u128>(d[i]) + (modulus[i] & mask) + carry;
            out.v_[i] = static_cast<std::uint64_t>(t);
            carry = static_cast<std::uint64_t>(t >> 64);
        }
        return out;
    }

    constexpr MontField operator-() const { return zero() - *this; }

    friend constexpr MontField operator*(const MontField& a, const MontField& b)
    {
        return from_raw(mont_mul(a.v_, b.v_));
    }

    MontField& operator+=(const MontField& o) { return *this = *this + o; }
    MontField& operator-=(const MontField& o) { return *this = *this - o; }
    MontField& operator*=(const MontField& o) { return *this = *this * o; }

    constexpr MontField square() const { return *this * *this; }
    constexpr MontField dbl() const { return *this + *this; }

    template <std::size_t N>
    constexpr MontField pow(const Limbs<N>& exp) const
    {
        // 4-bit fixed window
        MontField table[16];
        table[0] = one();
        for (int i = 1; i < 16; ++i) table[i] = table[i - 1] * *this;
        MontField acc = one();
        std::size_t bits = bit_length(exp);
        std::size_t windows = (bits + 3) / 4;
        for (std::size_t w = windows; w-- > 0;) {
            acc = acc.square().square().square().square();
            acc *= table[bits_at(exp, 4 * w, 4)];
        }
        return acc;
    }

    /// Binary extended Euclid on the canonical value; zero maps to zero.
    constexpr MontField inverse() const
    {
        if (is_zero()) return zero();
        U256 u = to_canonical();
        U256 v = modulus;
        U256 x1{1, 0, 0, 0};
        U256 x2{0, 0, 0, 0};
        const U256 one_limbs{1, 0, 0, 0};
        auto halve = [](U256& x) {
            x[0] = (x[0] >> 1) | (x[1] << 63);
            x[1] = (x[1] >> 1) | (x[2] << 63);
            x[2] = (x[2] >> 1) | (x[3] << 63);
            x[3] >>= 1;
        };
        auto halve_mod = [&](U256& x) {
            if (x[0] & 1) add_in_place(x, modulus);
            halve(x);
        };
        auto sub_mod = [](U256& x, const U256& y) {
            if (sub_in_place(x, y)) add_in_place(x, modulus);
        };
        while (u != one_limbs && v != one_limbs) {
            while ((u[0] & 1) == 0) {
                halve(u);
                halve_mod(x1);
            }
            while ((v[0] & 1) == 0) {
                halve(v);
                halve_mod(x2);
            }
            if (compare(u, v) >= 0) {
                sub_in_place(u, v);
                sub_mod(x1, x2);
            } else {
                sub_in_place(v, u);
                sub_mod(x2, x1);
            }
        }
        return from_canonical(u == one_limbs ? x1 : x2);
    }

    /// Legendre symbol test; zero counts as a square. Binary Jacobi symbol
    /// on the canonical value rather than an exponentiation.
    bool is_square() const
    {
        if (is_zero()) return true;
        U256 a = to_canonical();
        U256 n = modulus;
        bool negate = false;
        auto shift_right = [](U256& x, unsigned k) {
            for (int i = 0; i < 3; ++i) x[i] = (x[i] >> k) | (x[i + 1] << (64 - k));
            x[3] >>= k;
        };
        auto is_zero_limbs = [](const U256& x) { return (x[0] | x[1] | x[2] | x[3]) == 0; };
        while (!is_zero_limbs(a)) {
            while (a[0] == 0) {
                // 64 halvings: an even count, so no sign flip
                a = U256{a[1], a[2], a[3], 0};
            }
            const unsigned tz = static_cast<unsigned>(std::countr_zero(a[0]));
            if (tz != 0) {
                shift_right(a, tz);
                const auto r8 = n[0] & 7;
                if ((tz & 1) && (r8 == 3 || r8 == 5)) negate = !negate;
            }
            if (compare(a, n) < 0) {
                std::swap(a, n);
                if ((a[0] & 3) == 3 && (n[0] & 3) == 3) negate = !negate;
            }
            sub_in_place(a, n);
        }
        return !negate;
    }

    /// Square root for moduli congruent to 3 mod 4.
    std::optional<MontField> sqrt() const
    {
        static_assert((Params::modulus[0] & 3) == 3, "sqrt requires p = 3 mod 4");
        U256 e = add_small(modulus, 1);
        div_small(e, 4);
        MontField root = pow(e);
        if (root.square() == *this) return root;
        return std::nullopt;
    }

private:
    static constexpr U256 load_be(std::span<const std::uint8_t> in)
    {
        U256 v{};
        for (std::size_t i = 0; i < 32; ++i) {
            v[3 - i / 8] |= static_cast<std::uint64_t>(in[i]) << (8 * (7 - i % 8));
        }
        return v;
    }

    // CIOS without the extra carry word; valid because the top limb of the
    // modulus leaves at least one spare bit.
    static constexpr U256 mont_mul(const U256& a, const U256& b)
    {
        static_assert(Params::modulus[3] < (~std::uint64_t{0} >> 1) - 1);
        std::uint64_t t0 = 0, t1 = 0, t2 = 0, t3 = 0;
        for (int i = 0; i < 4; ++i) {
            const std::uint64_t bi = b[i];
            u128 s = static_cast<u128>(a[0]) * bi + t0;
            std::uint64_t hi_a = static_cast<std::uint64_t>(s >> 64);
            t0 = static_cast<std::uint64_t>(s);
            const std::uint64_t m = t0 * inv;
            u128 r = static_cast<u128>(m) * modulus[0] + t0;
            std::uint64_t hi_c = static_cast<std::uint64_t>(r >> 64);

            s = static_cast<u128>(a[1]) * bi + t1 + hi_a;
            hi_a = static_cast<std::uint64_t>(s >> 64);
            r = static_cast<u128>(m) * modulus[1] + static_cast<std::uint64_t>(s) + hi_c;
            hi_c = static_cast<std::uint64_t>(r >> 64);
            t0 = static_cast<std::uint64_t>(r);

            s = static_cast<u128>(a[2]) * bi + t2 + hi_a;
            hi_a = static_cast<std::uint64_t>(s >> 64);
            r = static_cast<u128>(m) * modulus[2] + static_cast<std::uint64_t>(s) + hi_c;
            hi_c = static_cast<std::uint64_t>(r >> 64);
            t1 = static_cast<std::uint64_t>(r);

            s = static_cast<u128>(a[3]) * bi + t3 + hi_a;
            hi_a = static_cast<std::uint64_t>(s >> 64);
            r = static_cast<u128>(m) * modulus[3] + static_cast<std::uint64_t>(s) + hi_c;
            hi_c = static_cast<std::uint64_t>(r >> 64);
            t2 = static_cast<std::uint64_t>(r);

            t3 = hi_c + hi_a;
        }
        // branchless final subtraction
        U256 d;
        std::uint64_t borrow = 0;
        const std::uint64_t t[4] = {t0, t1, t2, t3};
        for (int i = 0; i < 4; ++i) {
            u128 diff = static_cast<u128>(t[i]) - modulus[i] - borrow;
            d[i] = static_cast<std::uint64_t>(diff);
            borrow = static_cast<std::uint64_t>(diff >> 64) & 1;
        }
        const std::uint64_t keep = std::uint64_t{0} - borrow;
        U256 out;
        for (int i = 0; i < 4; ++i) out[i] = (t[i] & keep) | (d[i] & ~keep);
        return out;
    }

    U256 v_{};
};

} // namespace dsaudit::algebra
