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
#include <memory>

#include <openssl/evp.h>

#include "dsaudit/common/bytes.hpp"

namespace dsaudit {

using Digest = std::array<std::uint8_t, 32>;

class Sha256 {
public:
    Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free)
    {
        if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
            throw std::runtime_error("EVP sha256 init failed");
        }
    }

    Sha256& update(ByteSpan data)
    {
        EVP_DigestUpdate(ctx_.get(), data.data(), data.size());
        return *this;
    }

    Sha256& update(std::string_view data)
    {
        EVP_DigestUpdate(ctx_.get(), data.data(), data.size());
        return *this;
    }

    Sha256& update_u8(std::uint8_t v) { return update(ByteSpan(&v, 1)); }

    Digest finish()
    {
        Digest out{};
        unsigned int len = 0;
        EVP_DigestFinal_ex(ctx_.get(), out.data(), &len);
        return out;
    }

    static Digest hash(ByteSpan data) { return Sha256().update(data).finish(); }

private:
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

} // namespace dsaudit
