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

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <utility>

#include "dsaudit/algebra/codec.hpp"
#include "dsaudit/algebra/hash.hpp"
#include "dsaudit/algebra/msm.hpp"
#include "dsaudit/algebra/pairing.hpp"

namespace dsaudit {

/// Reference bilinear suite: the 254-bit BN curve with generators (1, 2) and
/// the standard G2 generator. Protocol code is written against this interface
/// so that another suite only has to supply the same members.
struct Bn254Suite {
    static constexpr std::uint8_t id = 0x01;
    static constexpr std::string_view name = "BN254";

    using Scalar = algebra::bn254::Fr;
    using G1 = algebra::bn254::G1Affine;
    using G1Proj = algebra::bn254::G1;
    using G2 = algebra::bn254::G2Affine;
    using G2Proj = algebra::bn254::G2;
    using G2Prepared = algebra::bn254::G2Prepared;
    using Gt = algebra::bn254::Gt;

    static constexpr std::size_t scalar_bytes = algebra::bn254::codec::scalar_bytes;
    static constexpr std::size_t g1_bytes = algebra::bn254::codec::g1_bytes;
    static constexpr std::size_t g2_bytes = algebra::bn254::codec::g2_bytes;
    static constexpr std::size_t gt_bytes = algebra::bn254::codec::gt_bytes;
    /// Width of the challenge seeds in bits.
    static constexpr std::size_t security_lambda = 128;
    /// File bytes per block; 31 * 8 < 254 keeps every block below the group order.
    static constexpr std::size_t block_bytes = 31;

    static const G1& g1()
    {
        static const G1 g = algebra::bn254::G1Curve::generator();
        return g;
    }

    static const G2& g2()
    {
        static const G2 g = algebra::bn254::G2Curve::generator();
        return g;
    }

    static const std::shared_ptr<const G2Prepared>& g2_prepared()
    {
        static const auto p = std::make_shared<const G2Prepared>(g2());
        return p;
    }

    /// s * g1 through a precomputed table.
    static G1Proj mul_g1(const Scalar& s)
    {
        static const algebra::FixedBaseTable<algebra::bn254::G1Curve> table(g1());
        ++algebra::op_counters().g1_exps;
        return table.mul(s);
    }

    static G1Proj mul(const G1& p, const Scalar& s)
    {
        ++algebra::op_counters().g1_exps;
        return G1Proj(p) * s;
    }

    static G2Proj mul(const G2& p, const Scalar& s)
    {
        ++algebra::op_counters().g2_exps;
        return G2Proj(p) * s;
    }

    static G1Proj msm(std::span<const G1> points, std::span<const Scalar> scalars)
    {
        return algebra::msm<algebra::bn254::G1Curve, Scalar>(points, scalars);
    }

    static Gt pairing(const G1& p, const G2& q) { return algebra::bn254::pairing(p, q); }

    /// prod_i e(p_i, q_i) with one shared final exponentiation.
    static Gt multi_pairing(std::span<const std::pair<G1, const G2Prepared*>> pairs)
    {
        return algebra::bn254::multi_pairing(pairs);
    }

    static G1 hash_to_g1(std::string_view domain_tag, ByteSpan msg)
    {
        return algebra::bn254::hash_to_g1(domain_tag, msg);
    }

    static Scalar hash_to_scalar(std::string_view domain_tag, ByteSpan msg)
    {
        return algebra::bn254::hash_to_scalar(domain_tag, msg);
    }

    static Scalar hash_gt_to_scalar(const Gt& x) { return algebra::bn254::hash_gt_to_scalar(x); }

    static void write(const Scalar& v, std::span<std::uint8_t> out) { algebra::bn254::codec::write_scalar(v, out); }
    static void write(const G1& v, std::span<std::uint8_t> out) { algebra::bn254::codec::write_g1(v, out); }
    static void write(const G2& v, std::span<std::uint8_t> out) { algebra::bn254::codec::write_g2(v, out); }
    static void write(const Gt& v, std::span<std::uint8_t> out) { algebra::bn254::codec::write_gt(v, out); }

    static Scalar read_scalar(ByteSpan in) { return algebra::bn254::codec::read_scalar(in); }
    static G1 read_g1(ByteSpan in) { return algebra::bn254::codec::read_g1(in); }
    static G2 read_g2(ByteSpan in) { return algebra::bn254::codec::read_g2(in); }
    static Gt read_gt(ByteSpan in) { return algebra::bn254::codec::read_gt(in); }

    template <class T>
    static Bytes encode(const T& v)
    {
        Bytes out(size_of<T>());
        write(v, out);
        return out;
    }

    template <class T>
    static constexpr std::size_t size_of()
    {
        if constexpr (std::is_same_v<T, Scalar>) return scalar_bytes;
        else if constexpr (std::is_same_v<T, G1>) return g1_bytes;
        else if constexpr (std::is_same_v<T, G2>) return g2_bytes;
        else return gt_bytes;
    }
};

/// Suite identifier check for persisted artifacts.
template <class Suite>
void expect_suite(std::uint8_t id)
{
    if (id != Suite::id) {
        fail(ErrorCode::ParamMismatch, "artifact suite id " + std::to_string(id) + " does not match " +
                                           std::string(Suite::name) + " (" + std::to_string(Suite::id) + ")");
    }
}

} // namespace dsaudit
