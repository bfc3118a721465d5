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

#include <openssl/rand.h>

#include "dsaudit/common/sha256.hpp"

namespace dsaudit {

/// Source of uniformly random bytes. Key generation, file names and the
/// prover's blinding all draw from one of these.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual void fill(std::span<std::uint8_t> out) = 0;

    std::uint64_t next_u64()
    {
        std::uint8_t buf[8];
        fill(buf);
        return get_be(buf);
    }

    /// Uniform integer in [0, bound) by rejection sampling.
    std::uint64_t uniform(std::uint64_t bound)
    {
        const std::uint64_t limit = bound == 0 ? 0 : (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound + 1) % bound;
        for (;;) {
            std::uint64_t v = next_u64();
            if (v <= limit) {
                return v % bound;
            }
        }
    }

    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
};

class SystemRandom final : public RandomSource {
public:
    void fill(std::span<std::uint8_t> out) override
    {
        if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
            throw std::runtime_error("RAND_bytes failed");
        }
    }
};

/// Deterministic generator: SHA-256 in counter mode over a seed. Used for
/// reproducible simulations (`--seed`) and tests; not a substitute for the
/// system generator when real secrets are at stake.
class SeededRandom final : public RandomSource {
public:
    explicit SeededRandom(std::uint64_t seed)
    {
        Bytes s;
        put_u64_be(s, seed);
        seed_ = Sha256().update("dsaudit-drbg-seed").update(s).finish();
    }

    explicit SeededRandom(ByteSpan seed) { seed_ = Sha256().update("dsaudit-drbg-seed").update(seed).finish(); }

    void fill(std::span<std::uint8_t> out) override
    {
        for (auto& b : out) {
            if (pos_ == block_.size()) {
                refill();
            }
            b = block_[pos_++];
        }
    }

private:
    void refill()
    {
        Bytes ctr;
        put_u64_be(ctr, counter_++);
        block_ = Sha256().update(seed_).update(ctr).finish();
        pos_ = 0;
    }

    Digest seed_{};
    Digest block_{};
    std::size_t pos_ = 32;
    std::uint64_t counter_ = 0;
};

} // namespace dsaudit
