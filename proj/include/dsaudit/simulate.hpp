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
#include <cmath>
#include <numeric>
#include <string>

#include "json.hpp"

#include "dsaudit/attack.hpp"
#include "dsaudit/contract.hpp"

namespace dsaudit {

/// 1 - (1 - f)^k: chance that k challenged chunks hit a corrupted fraction f,
/// sampling with replacement (the d >> k regime).
inline double detection_probability(double f, std::uint64_t k)
{
    if (f <= 0) return 0;
    if (f >= 1) return 1;
    return -std::expm1(static_cast<double>(k) * std::log1p(-f));
}

/// Exact form for k distinct chunks out of d with `corrupted` bad ones.
inline double detection_probability(std::uint64_t corrupted, std::uint64_t d, std::uint64_t k)
{
    if (corrupted == 0) return 0;
    k = std::min(k, d);
    if (corrupted + k > d) return 1;
    double miss = 1;
    for (std::uint64_t i = 0; i < k; ++i) miss *= static_cast<double>(d - corrupted - i) / static_cast<double>(d - i);
    return 1 - miss;
}

struct RunConfig {
    std::uint8_t suite = 0x01;
    std::uint32_t s = 50;
    std::uint64_t k = 300;
    std::uint64_t num = 10;
    std::uint64_t audit_interval = 24;
    std::uint64_t duration = 0;             ///< 0 = num * audit_interval
    std::uint64_t beacon_seed = 1;
    std::uint64_t seed = 1;                 ///< keys, file name, blinding, corruption
    std::uint64_t owner_deposit = 1000;
    std::uint64_t provider_deposit = 1000;
    std::uint64_t storage_fee = 0;
    double corrupt_fraction = 0;            ///< share of chunks overwritten
    std::uint64_t corrupt_from_audit = 0;   ///< first audit that sees the damage
    std::uint64_t replay_period = 0;        ///< > 0: adversarial beacon repeating (C1, C2)
    bool insecure_demo = false;
    std::uint64_t contracts = 1;            ///< independent contracts to run
    std::uint64_t file_bytes = 1 << 20;     ///< random file size when no file is given
    std::string file, ledger;

    void validate() const
    {
        auto bad = [](const std::string& why) { fail(ErrorCode::InvalidConfig, why); };
        if (suite != 0x01) bad("unknown suite id " + std::to_string(suite));
        if (s < 1) bad("s must be at least 1");
        if (k < 1) bad("k must be at least 1");
        if (num < 1) bad("num must be at least 1");
        if (audit_interval < 1) bad("audit_interval must be at least 1");
        if (duration != 0 && duration < num * audit_interval) bad("duration is shorter than num * audit_interval");
        if (owner_deposit == 0 || provider_deposit == 0) bad("deposits must be positive");
        if (!(corrupt_fraction >= 0 && corrupt_fraction <= 1)) bad("corrupt_fraction must lie in [0, 1]");
        if (contracts < 1) bad("contracts must be at least 1");
        if (file.empty() && file_bytes == 0) bad("file_bytes must be positive");
    }

    Agreement agreement() const
    {
        return {duration ? duration : num * audit_interval, num, k, audit_interval, storage_fee,
                insecure_demo ? ProofMode::InsecureDemo : ProofMode::Private};
    }
};

inline void from_json(const nlohmann::json& j, RunConfig& c)
{
    auto get = [&j](const char* key, auto& field) {
        if (j.contains(key)) j.at(key).get_to(field);
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        static const char* known[] = {"suite", "s", "k", "num", "audit_interval", "duration", "beacon_seed", "seed",
                                      "owner_deposit", "provider_deposit", "storage_fee", "corrupt_fraction",
                                      "corrupt_from_audit", "replay_period", "insecure_demo", "contracts",
                                      "file_bytes", "file", "ledger"};
        if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return it.key() == k; }) == std::end(known)) {
            fail(ErrorCode::InvalidConfig, "unknown config key '" + it.key() + "'");
        }
    }
    get("suite", c.suite);
    get("s", c.s);
    get("k", c.k);
    get("num", c.num);
    get("audit_interval", c.audit_interval);
    get("duration", c.duration);
    get("beacon_seed", c.beacon_seed);
    get("seed", c.seed);
    get("owner_deposit", c.owner_deposit);
    get("provider_deposit", c.provider_deposit);
    get("storage_fee", c.storage_fee);
    get("corrupt_fraction", c.corrupt_fraction);
    get("corrupt_from_audit", c.corrupt_from_audit);
    get("replay_period", c.replay_period);
    get("insecure_demo", c.insecure_demo);
    get("contracts", c.contracts);
    get("file_bytes", c.file_bytes);
    get("file", c.file);
    get("ledger", c.ledger);
}

/// Overwrites round(f * d) distinct chunks with fresh random scalars and
/// returns their indices.
template <class Suite>
std::vector<std::uint64_t> corrupt_chunks(FileEncoding<Suite>& enc, double f, RandomSource& rng)
{
    const auto count = static_cast<std::uint64_t>(std::llround(f * static_cast<double>(enc.d)));
    std::vector<std::uint64_t> order(static_cast<std::size_t>(enc.d));
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    for (std::uint64_t i = 0; i < count; ++i) std::swap(order[i], order[i + rng.uniform(enc.d - i)]);
    order.resize(static_cast<std::size_t>(count));
    for (auto i : order) {
        for (auto& m : enc.chunk(i)) m = Suite::Scalar::random(rng);
    }
    return order;
}

struct ContractSummary {
    std::uint64_t passes = 0;
    std::uint64_t fails = 0;
    std::uint64_t first_failure = ~std::uint64_t{0}; ///< audit index, if any
    Balances balances;
};

struct SimulationResult {
    std::vector<ContractSummary> contracts;
    std::string ledger; ///< JSON lines of the first contract
    std::uint64_t corrupted_chunks = 0;
    std::uint64_t d = 0;

    std::uint64_t contracts_with_failure() const
    {
        return static_cast<std::uint64_t>(std::count_if(contracts.begin(), contracts.end(), [](const auto& c) { return c.fails > 0; }));
    }
};

/// Owner and provider run honestly (the provider possibly on a damaged copy)
/// against the contract for `contracts` independent agreements over one file.
/// Contract i uses beacon seed beacon_seed + i.
template <class Suite>
SimulationResult simulate(const RunConfig& cfg, ByteSpan data)
{
    cfg.validate();
    SeededRandom rng(cfg.seed);
    auto keys = keygen<Suite>(cfg.s, rng);
    auto enc = encode_file<Suite>(data, {cfg.s, Suite::block_bytes}, Suite::Scalar::random(rng));
    auto tags = generate_tags(keys.sk, keys.pk, enc);
    require(verify_tags(keys.pk, enc, tags), ErrorCode::InvalidConfig, "freshly generated tags failed verification");

    SimulationResult res;
    res.d = enc.d;
    auto damaged = enc;
    if (cfg.corrupt_fraction > 0) res.corrupted_chunks = corrupt_chunks(damaged, cfg.corrupt_fraction, rng).size();

    const FileMetadata<Suite> meta{enc.name, enc.d, enc.s, enc.original_length};
    for (std::uint64_t c = 0; c < cfg.contracts; ++c) {
        AuditContract<Suite> contract;
        contract.negotiate(cfg.agreement(), keys.pk, meta);
        contract.acknowledge();
        contract.freeze_deposits(cfg.owner_deposit, cfg.provider_deposit);

        SeededRandom blinding(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (c + 1)));
        ProviderFn<Suite> provider = [&](const Challenge<Suite>& ch, const ChallengeSet<Suite>& cs) -> std::optional<Bytes> {
            const auto& stored = cfg.corrupt_fraction > 0 && ch.round >= cfg.corrupt_from_audit ? damaged : enc;
            if (cfg.insecure_demo) return prove_nonprivate(keys.pk, stored, tags, ch, cs).to_bytes();
            return prove_private(keys.pk, stored, tags, ch, cs, blinding).to_bytes();
        };
        SeededBeacon base(cfg.beacon_seed + c);
        if (cfg.replay_period > 0) {
            ReplayBeacon replay(base, cfg.replay_period);
            contract.run(replay, provider);
        } else {
            contract.run(base, provider);
        }

        ContractSummary sum;
        for (const auto& r : contract.records()) {
            if (r.passed) {
                ++sum.passes;
            } else {
                ++sum.fails;
                sum.first_failure = std::min(sum.first_failure, r.audit);
            }
        }
        sum.balances = contract.balances();
        res.contracts.push_back(sum);
        if (c == 0) res.ledger = contract.ledger_jsonl();
    }
    return res;
}

} // namespace dsaudit
