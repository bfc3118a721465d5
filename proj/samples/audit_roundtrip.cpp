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


// Owner tags a file, a provider answers three audits through the contract,
// then the same provider loses part of the file and the next audit fails.

#include <cstdio>

#include "dsaudit/contract.hpp"
#include "dsaudit/simulate.hpp"

using namespace dsaudit;
using Suite = Bn254Suite;

int main()
{
    SeededRandom rng(2026);
    Bytes file(64 * 1024);
    rng.fill(file);

    const std::uint32_t s = 17;
    auto keys = keygen<Suite>(s, rng);
    auto enc = encode_file<Suite>(file, {s, Suite::block_bytes}, Suite::Scalar::random(rng));
    auto tags = generate_tags(keys.sk, keys.pk, enc);
    std::printf("file: %zu bytes, %llu chunks of %u blocks; tags accepted by provider: %s\n", file.size(),
                static_cast<unsigned long long>(enc.d), s, verify_tags(keys.pk, enc, tags) ? "yes" : "no");

    Agreement ag;
    ag.num = 4;
    ag.k = 50;
    ag.audit_interval = 10;
    ag.duration = 40;
    ag.storage_fee = 1;

    AuditContract<Suite> contract;
    contract.negotiate(ag, keys.pk, {enc.name, enc.d, enc.s, file.size()});
    contract.acknowledge();
    contract.freeze_deposits(400, 400);

    // the provider loses 10% of its copy before the last audit
    auto damaged = enc;
    corrupt_chunks(damaged, 0.10, rng);
    ProviderFn<Suite> provider = [&](const Challenge<Suite>& ch, const ChallengeSet<Suite>& cs) -> std::optional<Bytes> {
        const auto& stored = ch.round < 3 ? enc : damaged;
        return prove_private(keys.pk, stored, tags, ch, cs, rng).to_bytes();
    };
    SeededBeacon beacon(7);
    contract.run(beacon, provider);

    for (const auto& r : contract.records()) {
        std::printf("audit %llu at t=%llu: %s, %zu-byte proof\n", static_cast<unsigned long long>(r.audit),
                    static_cast<unsigned long long>(r.time), r.passed ? "pass" : "FAIL", r.proof.size());
    }
    const auto& b = contract.balances();
    std::printf("settled (fees plus refunds): provider %llu, owner %llu\n",
                static_cast<unsigned long long>(b.paid_to_provider), static_cast<unsigned long long>(b.paid_to_owner));
    std::printf("chance a 10%% loss escapes one %llu-chunk audit: %.2e\n", static_cast<unsigned long long>(ag.k),
                1 - detection_probability(0.10, ag.k));
    return 0;
}
