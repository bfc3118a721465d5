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

#include <fstream>
#include <iterator>
#include <string>

#include "dsaudit/keys.hpp"

namespace dsaudit {

inline Bytes read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorCode::Io, "cannot open " + path);
    return Bytes(std::istreambuf_iterator<char>(in), {});
}

inline void write_file(const std::string& path, ByteSpan data)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(out), ErrorCode::Io, "cannot write " + path);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    require(static_cast<bool>(out), ErrorCode::Io, "short write to " + path);
}

inline void write_file(const std::string& path, std::string_view text)
{
    write_file(path, ByteSpan(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

/// Parses an artifact, prefixing any decoding error with the file path.
template <class F>
auto parse_artifact(const std::string& path, F&& parse)
{
    Bytes bytes = read_file(path);
    try {
        return parse(ByteSpan(bytes));
    } catch (const Error& e) {
        fail(e.code(), path + ": " + e.detail());
    }
}

/// What the owner publishes about a stored file: suite byte || s (u32 BE) ||
/// name || original length (u64 BE) || d (u64 BE).
template <class Suite>
struct FileMeta {
    std::uint32_t s = 0;
    typename Suite::Scalar name;
    std::uint64_t original_length = 0;
    std::uint64_t d = 0;

    Bytes to_bytes() const
    {
        Bytes out{Suite::id};
        put_u32_be(out, s);
        append(out, Suite::encode(name));
        put_u64_be(out, original_length);
        put_u64_be(out, d);
        return out;
    }

    static FileMeta from_bytes(ByteSpan in)
    {
        ByteReader r(in);
        expect_suite<Suite>(r.u8());
        FileMeta m;
        m.s = r.u32();
        m.name = Suite::read_scalar(r.take(Suite::scalar_bytes));
        m.original_length = r.u64();
        m.d = r.u64();
        r.expect_end();
        require(m.s >= 1 && m.d == encoded_shape(m.original_length, {m.s, Suite::block_bytes}).d, ErrorCode::InvalidEncoding,
                "metadata chunk count disagrees with its length and s");
        return m;
    }
};

} // namespace dsaudit
