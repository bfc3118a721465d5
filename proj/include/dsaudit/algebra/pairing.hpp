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

#include <span>
#include <utility>
#include <vector>

#include "dsaudit/algebra/bn254.hpp"
#include "dsaudit/algebra/counters.hpp"

namespace dsaudit::algebra::bn254 {

/// Element of the order-r target group, written multiplicatively.
class Gt {
public:
    Gt() : v_(Fp12::one()) {}
    explicit Gt(const Fp12& v) : v_(v) {}

    static Gt identity() { return Gt(); }

    const Fp12& value() const { return v_; }
    bool is_identity() const { return v_.is_one(); }

    friend Gt operator*(const Gt& a, const Gt& b) { return Gt(a.v_ * b.v_); }
    Gt& operator*=(const Gt& o) { return *this = *this * o; }
    friend bool operator==(const Gt& a, const Gt& b) { return a.v_ == b.v_; }

    /// Inverse; conjugation suffices inside the cyclotomic subgroup.
    Gt inverse() const { return Gt(v_.conjugate()); }

    Gt pow(const Fr& k) const
    {
        ++op_counters().gt_exps;
        return Gt(v_.pow(k.to_canonical()));
    }

    /// Raw exponentiation without touching the counters; used for subgroup checks.
    template <std::size_t N>
    Gt pow_raw(const Limbs<N>& k) const
    {
        return Gt(v_.pow(k));
    }

private:
    Fp12 v_;
};

namespace detail {

struct Line {
    Fp2 slope;     // lambda
    Fp2 constant;  // lambda * x_T - y_T
    bool vertical = false;
};

inline Line line_and_double(G2Affine& t)
{
    Fp2 lambda = (t.x.square() * Fp::from_u64(3)) * t.y.dbl().inverse();
    Line line{lambda, lambda * t.x - t.y};
    Fp2 x3 = lambda.square() - t.x.dbl();
    t = G2Affine::from_xy(x3, lambda * (t.x - x3) - t.y);
    return line;
}

inline Line line_and_add(G2Affine& t, const G2Affine& q)
{
    if (t.x == q.x) {
        if (t.y == q.y) return line_and_double(t);
        t = G2Affine::identity();
        return Line{{}, {}, true};
    }
    Fp2 lambda = (q.y - t.y) * (q.x - t.x).inverse();
    Line line{lambda, lambda * t.x - t.y};
    Fp2 x3 = lambda.square() - t.x - q.x;
    t = G2Affine::from_xy(x3, lambda * (t.x - x3) - t.y);
    return line;
}

/// (c0, c1, c2) * (b0, b1, 0)
inline Fp6 mul_by_01(const Fp6& a, const Fp2& b0, const Fp2& b1)
{
    return {a.c0 * b0 + (a.c2 * b1).mul_by_xi(), a.c0 * b1 + a.c1 * b0, a.c1 * b1 + a.c2 * b0};
}

/// f * (a + b w + c w^3) with a in Fp.
inline Fp12 mul_by_line(const Fp12& f, const Fp& a, const Fp2& b, const Fp2& c)
{
    Fp6 t0{f.c0.c0 * a, f.c0.c1 * a, f.c0.c2 * a};
    Fp6 t1 = mul_by_01(f.c1, b, c);
    Fp6 sum = mul_by_01(f.c0 + f.c1, Fp2{a, Fp::zero()} + b, c);
    return {t0 + t1.mul_by_v(), sum - t0 - t1};
}

} // namespace detail

/// Line coefficients of the optimal ate Miller loop for one G2 point. Fixed
/// G2 inputs (g2 and the public-key elements) are prepared once and reused.
class G2Prepared {
public:
    G2Prepared() = default;

    explicit G2Prepared(const G2Affine& q) : infinity_(q.infinity)
    {
        if (infinity_) return;
        G2Affine t = q;
        for (std::size_t i = bit_length(ate_loop_count) - 1; i-- > 0;) {
            lines_.push_back(detail::line_and_double(t));
            if (test_bit(ate_loop_count, i)) lines_.push_back(detail::line_and_add(t, q));
        }
        // q1 = pi(q), q2 = -pi^2(q) on the twist
        const auto& fc = frobenius_constants();
        G2Affine q1 = G2Affine::from_xy(q.x.conjugate() * fc.x1, q.y.conjugate() * fc.y1);
        G2Affine q2 = G2Affine::from_xy(q.x * fc.x2, -(q.y * fc.y2));
        lines_.push_back(detail::line_and_add(t, q1));
        lines_.push_back(detail::line_and_add(t, q2));
    }

    bool infinity() const { return infinity_; }
    const std::vector<detail::Line>& lines() const { return lines_; }

private:
    struct FrobeniusConstants {
        Fp2 x1, y1, x2, y2;
        FrobeniusConstants()
        {
            Fp2 xi{Fp::from_u64(9), Fp::one()};
            U256 e3 = sub_small(Fp::modulus, 1);
            div_small(e3, 3);
            U256 e2 = sub_small(Fp::modulus, 1);
            div_small(e2, 2);
            x1 = xi.pow(e3);
            y1 = xi.pow(e2);
            // xi^((p^2 - 1) / k) = N(xi^((p - 1) / k))
            x2 = x1.conjugate() * x1;
            y2 = y1.conjugate() * y1;
        }
    };

    static const FrobeniusConstants& frobenius_constants()
    {
        static const FrobeniusConstants c;
        return c;
    }

    bool infinity_ = true;
    std::vector<detail::Line> lines_;
};

/// Product of Miller loops over all pairs; identity inputs contribute 1.
inline Fp12 miller_loop(std::span<const std::pair<G1Affine, const G2Prepared*>> pairs)
{
    op_counters().pairings += pairs.size();
    Fp12 f = Fp12::one();
    std::vector<std::size_t> cursor(pairs.size(), 0);
    auto apply = [&](std::size_t idx) {
        const auto& [p, q] = pairs[idx];
        if (p.infinity || q->infinity()) return;
        const auto& line = q->lines()[cursor[idx]];
        if (!line.vertical) f = detail::mul_by_line(f, p.y, -(line.slope * p.x), line.constant);
    };
    auto advance = [&](std::size_t idx) {
        apply(idx);
        ++cursor[idx];
    };
    for (std::size_t i = bit_length(ate_loop_count) - 1; i-- > 0;) {
        f = f.square();
        for (std::size_t k = 0; k < pairs.size(); ++k) advance(k);
        if (test_bit(ate_loop_count, i)) {
            for (std::size_t k = 0; k < pairs.size(); ++k) advance(k);
        }
    }
    for (int extra = 0; extra < 2; ++extra) {
        for (std::size_t k = 0; k < pairs.size(); ++k) advance(k);
    }
    return f;
}

namespace detail {

/// x^k for x in the cyclotomic subgroup and a small exponent.
inline Fp12 cyclotomic_pow(const Fp12& x, std::uint64_t k)
{
    Fp12 acc = Fp12::one();
    bool started = false;
    for (int i = 63; i >= 0; --i) {
        if (started) acc = acc.square();
        if ((k >> i) & 1) {
            acc = started ? acc * x : x;
            started = true;
        }
    }
    return acc;
}

} // namespace detail

/// f^((p^12 - 1) / r). The hard part uses the exact base-p decomposition
/// (p^4 - p^2 + 1) / r = p^3 + l2 p^2 + l1 p + l0 with
///   l2 = 6u^2 + 1, l1 = -36u^3 - 18u^2 - 12u + 1, l0 = -36u^3 - 30u^2 - 18u - 2,
/// so the result is bit-identical to a plain exponentiation.
inline Gt final_exponentiation(const Fp12& f)
{
    ++op_counters().final_exps;
    using detail::cyclotomic_pow;
    Fp12 t = f.conjugate() * f.inverse();
    t = t.frobenius(2) * t;

    Fp12 a = cyclotomic_pow(t, bn_u);
    Fp12 b = cyclotomic_pow(a, bn_u);
    Fp12 c = cyclotomic_pow(b, bn_u);

    Fp12 c36 = cyclotomic_pow(c, 36);
    Fp12 b6 = cyclotomic_pow(b, 6);
    Fp12 b18 = cyclotomic_pow(b6, 3);
    Fp12 b30 = b18 * b6.square();
    Fp12 a6 = cyclotomic_pow(a, 6);
    Fp12 a12 = a6.square();
    Fp12 a18 = a12 * a6;

    Fp12 f0 = (t.square() * a18 * b30 * c36).conjugate();
    Fp12 f1 = t * (a12 * b18 * c36).conjugate();
    Fp12 f2 = t * b6;
    return Gt(f0 * f1.frobenius(1) * f2.frobenius(2) * t.frobenius(3));
}

inline Gt multi_pairing(std::span<const std::pair<G1Affine, const G2Prepared*>> pairs)
{
    return final_exponentiation(miller_loop(pairs));
}

inline Gt pairing(const G1Affine& p, const G2Affine& q)
{
    G2Prepared prepared(q);
    std::pair<G1Affine, const G2Prepared*> pair{p, &prepared};
    return multi_pairing(std::span(&pair, 1));
}

inline bool gt_in_subgroup(const Gt& x) { return x.pow_raw(Fr::modulus).is_identity(); }

} // namespace dsaudit::algebra::bn254
