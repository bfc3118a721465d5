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
#include <vector>

#include "dsaudit/algebra/bn254.hpp"
#include "dsaudit/algebra/counters.hpp"

namespace dsaudit::algebra {

/// Bucket (Pippenger) multi-scalar multiplication: sum_i scalars[i] * points[i].
template <class Curve, class Scalar>
Jacobian<Curve> msm(std::span<const Affine<Curve>> points, std::span<const Scalar> scalars)
{
    using Point = Jacobian<Curve>;
    const std::size_t n = std::min(points.size(), scalars.size());
    op_counters().msm_terms += n;

    std::vector<U256> ks(n);
    std::size_t max_bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ks[i] = scalars[i].to_canonical();
        max_bits = std::max(max_bits, bit_length(ks[i]));
    }
    if (n == 0 || max_bits == 0) return Point::identity();

    if (n < 8) {
        Point acc;
        for (std::size_t i = 0; i < n; ++i) acc += Point(points[i]).mul(ks[i]);
        return acc;
    }

    std::size_t c = 4;
    while (c < 16 && (std::size_t{1} << (c + 3)) < n) ++c;
    const std::size_t windows = (max_bits + c - 1) / c;
    std::vector<Point> buckets(std::size_t{1} << c);

    Point acc;
    for (std::size_t w = windows; w-- > 0;) {
        for (std::size_t i = 0; i < c; ++i) acc = acc.dbl();
        std::fill(buckets.begin(), buckets.end(), Point::identity());
        for (std::size_t i = 0; i < n; ++i) {
            auto digit = bits_at(ks[i], w * c, c);
            if (digit != 0) buckets[digit] = buckets[digit].add_affine(points[i]);
        }
        Point running, window_sum;
        for (std::size_t b = buckets.size() - 1; b >= 1; --b) {
            running += buckets[b];
            window_sum += running;
        }
        acc += window_sum;
    }
    return acc;
}

/// Precomputed multiples base * d * 16^w for fixed-base multiplication.
template <class Curve>
class FixedBaseTable {
public:
    using Point = Jacobian<Curve>;

    explicit FixedBaseTable(const Affine<Curve>& base)
    {
        std::vector<Point> all;
        all.reserve(windows * 15);
        Point row = Point(base);
        for (std::size_t w = 0; w < windows; ++w) {
            Point cur = row;
            for (int d = 1; d < 16; ++d) {
                all.push_back(cur);
                cur += row;
            }
            row = cur; // 16 * row
        }
        table_ = Point::batch_to_affine(all);
    }

    template <class Scalar>
    Point mul(const Scalar& k) const
    {
        U256 limbs = k.to_canonical();
        Point acc;
        for (std::size_t w = 0; w < windows; ++w) {
            auto digit = bits_at(limbs, 4 * w, 4);
            if (digit != 0) acc = acc.add_affine(table_[w * 15 + digit - 1]);
        }
        return acc;
    }

private:
    static constexpr std::size_t windows = 64;
    std::vector<Affine<Curve>> table_;
};

} // namespace dsaudit::algebra
