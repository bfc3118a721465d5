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

namespace dsaudit::algebra {

using u128 = unsigned __int128;

/// Little-endian 64-bit limbs.
template <std::size_t N>
using Limbs = std::array<std::uint64_t, N>;

using U256 = Limbs<4>;

template <std::size_t N>
constexpr bool is_zero(const Limbs<N>& a)
{
    for (auto v : a) {
        if (v != 0) return false;
    }
    return true;
}

template <std::size_t N>
constexpr int compare(const Limbs<N>& a, const Limbs<N>& b)
{
    for (std::size_t i = N; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

template <std::size_t N>
constexpr std::uint64_t add_in_place(Limbs<N>& a, const Limbs<N>& b)
{
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < N; ++i) {
        u128 s = static_cast<u128>(a[i]) + b[i] + carry;
        a[i] = static_cast<std::uint64_t>(s);
        carry = static_cast<std::uint64_t>(s >> 64);
    }
    return carry;
}

template <std::size_t N>
constexpr std::uint64_t sub_in_place(Limbs<N>& a, const Limbs<N>& b)
{
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < N; ++i) {
        u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
        a[i] = static_cast<std::uint64_t>(d);
        borrow = static_cast<std::uint64_t>(d >> 64) & 1;
    }
    return borrow;
}

template <std::size_t N>
constexpr bool test_bit(const Limbs<N>& a, std::size_t bit)
{
    return bit < 64 * N && ((a[bit / 64] >> (bit % 64)) & 1) != 0;
}

template <std::size_t N>
constexpr std::size_t bit_length(const Limbs<N>& a)
{
    for (std::size_t i = N; i-- > 0;) {
        if (a[i] != 0) {
            std::size_t bits = 64;
            while (((a[i] >> (bits - 1)) & 1) == 0) --bits;
            return 64 * i + bits;
        }
    }
    return 0;
}

/// Extracts `width` bits starting at `bit` (width <= 63).
template <std::size_t N>
constexpr std::uint64_t bits_at(const Limbs<N>& a, std::size_t bit, std::size_t width)
{
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < width; ++i) {
        if (test_bit(a, bit + i)) out |= std::uint64_t{1} << i;
    }
    return out;
}

/// Divides in place by a small divisor, returns the remainder.
template <std::size_t N>
constexpr std::uint64_t div_small(Limbs<N>& a, std::uint64_t divisor)
{
    u128 rem = 0;
    for (std::size_t i = N; i-- > 0;) {
        u128 cur = (rem << 64) | a[i];
        a[i] = static_cast<std::uint64_t>(cur / divisor);
        rem = cur % divisor;
    }
    return static_cast<std::uint64_t>(rem);
}

template <std::size_t N>
constexpr Limbs<N> sub_small(Limbs<N> a, std::uint64_t v)
{
    Limbs<N> b{};
    b[0] = v;
    sub_in_place(a, b);
    return a;
}

template <std::size_t N>
constexpr Limbs<N> add_small(Limbs<N> a, std::uint64_t v)
{
    Limbs<N> b{};
    b[0] = v;
    add_in_place(a, b);
    return a;
}

} // namespace dsaudit::algebra
