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
#include <span>
#include <vector>

#include "dsaudit/suite.hpp"

namespace dsaudit {

struct EncodingParams {
    std::size_t s = 1;            ///< blocks per chunk
    std::size_t block_bytes = 31; ///< file bytes per block

    template <class Suite>
    void validate() const
    {
        require(s >= 1, ErrorCode::ParamMismatch, "blocks per chunk must be at least 1");
        require(block_bytes >= 1 && block_bytes * 8 < algebra::bit_length(Suite::Scalar::modulus),
                ErrorCode::ParamMismatch, "block width must stay below the scalar modulus");
    }
};

/// A file as d chunks of s scalars; chunk i holds the coefficients of
/// M_i(x) = m_{i,0} + m_{i,1} x + ... + m_{i,s-1} x^{s-1}.
template <class Suite>
struct FileEncoding {
    using Scalar = typename Suite::Scalar;

    Scalar name;
    std::uint64_t n = 0;               ///< block count
    std::uint64_t d = 0;               ///< chunk count, ceil(n / s)
    std::size_t s = 0;
    std::uint64_t original_length = 0; ///< bytes
    std::vector<Scalar> blocks;        ///< d * s scalars, chunk-major

    std::span<const Scalar> chunk(std::uint64_t i) const
    {
        return std::span<const Scalar>(blocks).subspan(static_cast<std::size_t>(i) * s, s);
    }

    std::span<Scalar> chunk(std::uint64_t i) { return std::span<Scalar>(blocks).subspan(static_cast<std::size_t>(i) * s, s); }
};

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0 ? 1 : 0); }

struct EncodedShape {
    std::uint64_t n; ///< blocks
    std::uint64_t d; ///< chunks
};

/// Block and chunk counts for a file of the given length, without encoding it.
inline EncodedShape encoded_shape(std::uint64_t length, const EncodingParams& params)
{
    const std::uint64_t n = ceil_div(length, params.block_bytes);
    return {n, ceil_div(n, params.s)};
}

/// Consecutive block_bytes windows read as big-endian integers; the final
/// block is zero-padded on the right and the final chunk with zero blocks.
template <class Suite>
FileEncoding<Suite> encode_file(ByteSpan data, const EncodingParams& params, const typename Suite::Scalar& name)
{
    using Scalar = typename Suite::Scalar;
    params.validate<Suite>();
    require(!data.empty(), ErrorCode::EmptyFile, "cannot encode an empty file");

    FileEncoding<Suite> enc;
    enc.name = name;
    enc.s = params.s;
    enc.original_length = data.size();
    const auto shape = encoded_shape(data.size(), params);
    enc.n = shape.n;
    enc.d = shape.d;
    enc.blocks.assign(static_cast<std::size_t>(enc.d * params.s), Scalar::zero());

    std::uint8_t buf[32];
    for (std::uint64_t b = 0; b < enc.n; ++b) {
        std::fill(std::begin(buf), std::end(buf), 0);
        const std::size_t start = static_cast<std::size_t>(b * params.block_bytes);
        const std::size_t len = std::min(params.block_bytes, data.size() - start);
        // right-aligned block_bytes window, zero-padded on the right
        std::copy(data.begin() + start, data.begin() + start + len, buf + 32 - params.block_bytes);
        enc.blocks[b] = *Scalar::from_bytes_be(buf);
    }
    return enc;
}

template <class Suite>
Bytes decode_file(const FileEncoding<Suite>& enc, const EncodingParams& params)
{
    require(enc.original_length <= enc.n * params.block_bytes, ErrorCode::InconsistentLength,
            "original length " + std::to_string(enc.original_length) + " exceeds " + std::to_string(enc.n) +
                " blocks of " + std::to_string(params.block_bytes) + " bytes");
    require(enc.blocks.size() >= enc.n, ErrorCode::InconsistentLength, "fewer blocks than declared");
    Bytes out;
    out.reserve(static_cast<std::size_t>(enc.n * params.block_bytes));
    std::uint8_t buf[32];
    for (std::uint64_t b = 0; b < enc.n; ++b) {
        enc.blocks[b].to_bytes_be(buf);
        for (std::size_t i = 0; i < 32 - params.block_bytes; ++i) {
            require(buf[i] == 0, ErrorCode::InconsistentLength, "block " + std::to_string(b) + " is wider than the block width");
        }
        out.insert(out.end(), buf + 32 - params.block_bytes, buf + 32);
    }
    out.resize(static_cast<std::size_t>(enc.original_length));
    return out;
}

/// Horner evaluation of a chunk polynomial.
template <class Scalar>
Scalar chunk_polynomial_eval(std::span<const Scalar> chunk, const Scalar& x)
{
    Scalar acc = Scalar::zero();
    for (std::size_t j = chunk.size(); j-- > 0;) acc = acc * x + chunk[j];
    return acc;
}

} // namespace dsaudit
