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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsaudit/common/error.hpp"

namespace dsaudit {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

inline void append(Bytes& out, ByteSpan in) { out.insert(out.end(), in.begin(), in.end()); }

inline void append(Bytes& out, std::string_view in) { out.insert(out.end(), in.begin(), in.end()); }

inline void put_u32_be(Bytes& out, std::uint32_t v)
{
    for (int i = 3; i >= 0; --i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

inline void put_u64_be(Bytes& out, std::uint64_t v)
{
    for (int i = 7; i >= 0; --i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

inline std::uint64_t get_be(ByteSpan in)
{
    std::uint64_t v = 0;
    for (auto b : in) {
        v = (v << 8) | b;
    }
    return v;
}

inline std::string to_hex(ByteSpan in)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(in.size() * 2);
    for (auto b : in) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

inline Bytes from_hex(std::string_view hex)
{
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    require(hex.size() % 2 == 0, ErrorCode::InvalidEncoding, "odd-length hex string");
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        int hi = nibble(hex[2 * i]);
        int lo = nibble(hex[2 * i + 1]);
        require(hi >= 0 && lo >= 0, ErrorCode::InvalidEncoding, "non-hex character");
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

/// Sequential reader over a byte buffer; every short read is a WrongLength
/// error that reports the offset it happened at.
class ByteReader {
public:
    explicit ByteReader(ByteSpan data) : data_(data) {}

    ByteSpan take(std::size_t n)
    {
        if (n > remaining()) {
            fail(ErrorCode::WrongLength, "need " + std::to_string(n) + " bytes at offset " +
                                             std::to_string(pos_) + ", have " + std::to_string(remaining()));
        }
        auto out = data_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    std::uint8_t u8() { return take(1)[0]; }
    std::uint32_t u32() { return static_cast<std::uint32_t>(get_be(take(4))); }
    std::uint64_t u64() { return get_be(take(8)); }

    std::size_t offset() const { return pos_; }
    std::size_t remaining() const { return data_.size() - pos_; }

    void expect_end() const
    {
        if (remaining() != 0) {
            fail(ErrorCode::WrongLength, std::to_string(remaining()) + " trailing bytes at offset " +
                                             std::to_string(pos_));
        }
    }

private:
    ByteSpan data_;
    std::size_t pos_ = 0;
};

} // namespace dsaudit
