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

#include <algorithm>

#include <vector>

#include "dsaudit/algebra/bigint.hpp"

namespace dsaudit::algebra {

/// Affine point on a short Weierstrass curve y^2 = x^3 + b (a = 0).
template <class Curve>
struct Affine {
    using F = typename Curve::Field;
    F x{}, y{};
    bool infinity = true;

    static Affine identity() { return {}; }
    static Affine from_xy(const F& x, const F& y) { return {x, y, false}; }

    bool on_curve() const { return infinity || y.square() == x.square() * x + Curve::b(); }

    Affine operator-() const { return infinity ? *this : Affine{x, -y, false}; }

    friend bool operator==(const Affine& a, const Affine& b)
    {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
};

/// Jacobian point (X / Z^2, Y / Z^3); Z = 0 is the identity.
template <class Curve>
class Jacobian {
public:
    using F = typename Curve::Field;
    using AffinePoint = Affine<Curve>;

    Jacobian() : x_(F::one()), y_(F::one()), z_(F::zero()) {}
    Jacobian(const AffinePoint& p)
        : x_(p.infinity ? F::one() : p.x), y_(p.infinity ? F::one() : p.y), z_(p.infinity ? F::zero() : F::one())
    {
    }

    static Jacobian identity() { return Jacobian(); }
    static Jacobian generator() { return Jacobian(Curve::generator()); }

    bool is_identity() const { return z_.is_zero(); }

    AffinePoint to_affine() const
    {
        if (is_identity()) return AffinePoint::identity();
        F zinv = z_.inverse();
        F zinv2 = zinv.square();
        return AffinePoint::from_xy(x_ * zinv2, y_ * zinv2 * zinv);
    }

    /// Normalizes many points with a single inversion.
    static std::vector<AffinePoint> batch_to_affine(const std::vector<Jacobian>& points)
    {
        std::vector<AffinePoint> out(points.size());
        std::vector<F> prefix(points.size());
        F acc = F::one();
        for (std::size_t i = 0; i < points.size(); ++i) {
            prefix[i] = acc;
            if (!points[i].is_identity()) acc = acc * points[i].z_;
        }
        F inv = acc.inverse();
        for (std::size_t i = points.size(); i-- > 0;) {
            const auto& p = points[i];
            if (p.is_identity()) continue;
            F zinv = inv * prefix[i];
            inv = inv * p.z_;
            F zinv2 = zinv.square();
            out[i] = AffinePoint::from_xy(p.x_ * zinv2, p.y_ * zinv2 * zinv);
        }
        return out;
    }

    Jacobian dbl() const
    {
        if (is_identity()) return *this;
        // dbl-2009-l
        F a = x_.square();
        F b = y_.square();
        F c = b.square();
        F d = ((x_ + b).square() - a - c).dbl();
        F e = a.dbl() + a;
        F f = e.square();
        Jacobian r;
        r.x_ = f - d.dbl();
        r.y_ = e * (d - r.x_) - c.dbl().dbl().dbl();
        r.z_ = (y_ * z_).dbl();
        return r;
    }

    friend Jacobian operator+(const Jacobian& p, const Jacobian& q)
    {
        if (p.is_identity()) return q;
        if (q.is_identity()) return p;
        // add-2007-bl
        F z1z1 = p.z_.square();
        F z2z2 = q.z_.square();
        F u1 = p.x_ * z2z2;
        F u2 = q.x_ * z1z1;
        F s1 = p.y_ * q.z_ * z2z2;
        F s2 = q.y_ * p.z_ * z1z1;
        if (u1 == u2) {
            if (s1 == s2) return p.dbl();
            return identity();
        }
        F h = u2 - u1;
        F i = h.dbl().square();
        F j = h * i;
        F r = (s2 - s1).dbl();
        F v = u1 * i;
        Jacobian out;
        out.x_ = r.square() - j - v.dbl();
        out.y_ = r * (v - out.x_) - (s1 * j).dbl();
        out.z_ = ((p.z_ + q.z_).square() - z1z1 - z2z2) * h;
        return out;
    }

    /// Mixed addition with an affine point (madd-2007-bl).
    Jacobian add_affine(const AffinePoint& q) const
    {
        if (q.infinity) return *this;
        if (is_identity()) return Jacobian(q);
        F z1z1 = z_.square();
        F u2 = q.x * z1z1;
        F s2 = q.y * z_ * z1z1;
        if (u2 == x_) {
            if (s2 == y_) return dbl();
            return identity();
        }
        F h = u2 - x_;
        F hh = h.square();
        F i = hh.dbl().dbl();
        F j = h * i;
        F r = (s2 - y_).dbl();
        F v = x_ * i;
        Jacobian out;
        out.x_ = r.square() - j - v.dbl();
        out.y_ = r * (v - out.x_) - (y_ * j).dbl();
        out.z_ = (z_ + h).square() - z1z1 - hh;
        return out;
    }

    Jacobian operator-() const
    {
        Jacobian r = *this;
        r.y_ = -r.y_;
        return r;
    }

    friend Jacobian operator-(const Jacobian& p, const Jacobian& q) { return p + (-q); }
    Jacobian& operator+=(const Jacobian& o) { return *this = *this + o; }

    friend bool operator==(const Jacobian& p, const Jacobian& q)
    {
        if (p.is_identity() || q.is_identity()) return p.is_identity() == q.is_identity();
        F z1z1 = p.z_.square();
        F z2z2 = q.z_.square();
        if (!(p.x_ * z2z2 == q.x_ * z1z1)) return false;
        return p.y_ * q.z_ * z2z2 == q.y_ * p.z_ * z1z1;
    }

    /// Variable-base multiplication by a canonical integer (4-bit window).
    template <std::size_t N>
    Jacobian mul(const Limbs<N>& k) const
    {
        std::size_t bits = bit_length(k);
        if (bits == 0 || is_identity()) return identity();
        Jacobian table[16];
        table[1] = *this;
        for (int i = 2; i < 16; ++i) table[i] = table[i - 1] + *this;
        Jacobian acc;
        for (std::size_t w = (bits + 3) / 4; w-- > 0;) {
            acc = acc.dbl().dbl().dbl().dbl();
            auto digit = bits_at(k, 4 * w, 4);
            if (digit != 0) acc += table[digit];
        }
        return acc;
    }

    /// (c X : Y : Z), i.e. the affine map x -> c x.
    Jacobian scale_x(const F& c) const
    {
        Jacobian r = *this;
        r.x_ = r.x_ * c;
        return r;
    }

    /// k1 p + k2 q for half-width scalars, interleaved width-5 NAF.
    static Jacobian mul_two(const Jacobian& p, unsigned __int128 k1, const Jacobian& q, unsigned __int128 k2)
    {
        constexpr int w = 5;
        auto naf = [](unsigned __int128 k, std::int8_t* out) {
            int len = 0;
            while (k != 0) {
                std::int8_t digit = 0;
                if (k & 1) {
                    int m = static_cast<int>(k & ((1u << w) - 1));
                    if (m >= (1 << (w - 1))) m -= 1 << w;
                    digit = static_cast<std::int8_t>(m);
                    if (m > 0) k -= static_cast<unsigned>(m);
                    else k += static_cast<unsigned>(-m);
                }
                out[len++] = digit;
                k >>= 1;
            }
            return len;
        };
        std::int8_t n1[130] = {}, n2[130] = {};
        const int len = std::max(naf(k1, n1), naf(k2, n2));

        // odd multiples 1, 3, ..., 15
        Jacobian t1[1 << (w - 2)], t2[1 << (w - 2)];
        auto fill = [](const Jacobian& base, Jacobian* t) {
            Jacobian twice = base.dbl();
            t[0] = base;
            for (int i = 1; i < (1 << (w - 2)); ++i) t[i] = t[i - 1] + twice;
        };
        fill(p, t1);
        fill(q, t2);

        Jacobian acc;
        for (int i = len; i-- > 0;) {
            acc = acc.dbl();
            if (n1[i] > 0) acc += t1[n1[i] / 2];
            else if (n1[i] < 0) acc += -t1[-n1[i] / 2];
            if (n2[i] > 0) acc += t2[n2[i] / 2];
            else if (n2[i] < 0) acc += -t2[-n2[i] / 2];
        }
        return acc;
    }

private:
    F x_, y_, z_;
};

} // namespace dsaudit::algebra
