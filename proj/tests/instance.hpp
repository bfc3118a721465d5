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

// Shared honest-instance builder for the protocol tests.

#include "dsaudit/verifier.hpp"

namespace dsaudit::testing {

using Suite = Bn254Suite;
using Scalar = Suite::Scalar;

struct Instance {
    Bytes data;
    KeyPair<Suite> keys;
    FileEncoding<Suite> enc;
    TagSet<Suite> tags;

    VerificationContext<Suite> context(std::uint64_t k) const { return {keys.pk, enc.name, enc.d, k}; }
};

inline Instance make_instance(RandomSource& rng, std::size_t bytes, std::uint32_t s)
{
    Instance in;
    in.data.resize(bytes);
    rng.fill(in.data);
    in.keys = keygen<Suite>(s, rng);
    in.enc = encode_file<Suite>(in.data, {s, Suite::block_bytes}, Scalar::random(rng));
    in.tags = generate_tags(in.keys.sk, in.keys.pk, in.enc);
    return in;
}

inline Challenge<Suite> random_challenge(RandomSource& rng, std::uint64_t round = 0)
{
    BeaconWord w{};
    rng.fill(w);
    return Challenge<Suite>::from_word(w, round);
}

} // namespace dsaudit::testing
