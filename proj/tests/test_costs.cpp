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

#include <gtest/gtest.h>

#include "dsaudit/costs.hpp"
#include "dsaudit/simulate.hpp"

using namespace dsaudit;
using namespace dsaudit::costs;

TEST(Costs, PerAudit)
{
    FeeParams fp;
    fp.beacon_cost_per_round = 0;
    // 589,000 gas * 5e-9 ETH/gas = 0.002945 ETH; * 143 USD/ETH = 0.421135 USD
    EXPECT_NEAR(per_audit_cost(fp), 0.421135, 1e-12);
    EXPECT_EQ(589000ULL * 5 * 143, 421135000ULL);

    FeeParams none;
    none.gas_per_audit = 0;
    EXPECT_EQ(per_audit_cost(none), 0.0);
    none.beacon_cost_per_round = 0.05;
    EXPECT_DOUBLE_EQ(per_audit_cost(none), 0.05);
}

TEST(Costs, Annual)
{
    FeeParams fp;
    fp.onetime_storage_gas = 100000;
    fp.audits_per_year = 0;
    EXPECT_DOUBLE_EQ(annual_cost(fp), onetime_cost(fp));
    fp.audits_per_year = 365;
    EXPECT_DOUBLE_EQ(annual_cost(fp), 365 * per_audit_cost(fp) + onetime_cost(fp));
}

TEST(Costs, LinearAndMonotone)
{
    FeeParams base;
    base.beacon_cost_per_round = 0.01;
    base.onetime_storage_gas = 200000;
    const double fixed = onetime_cost(base);
    auto recurring = [&](FeeParams fp) { return annual_cost(fp) - fixed; };
    for (double m : {0.0, 0.5, 2.0, 10.0}) {
        FeeParams a = base, r = base, y = base;
        a.audits_per_year *= m;
        r.redundancy_factor *= m;
        y.duration_years *= m;
        EXPECT_NEAR(recurring(a), m * recurring(base), 1e-9);
        EXPECT_NEAR(recurring(r), m * recurring(base), 1e-9);
        EXPECT_NEAR(recurring(y), m * recurring(base), 1e-9);
    }
    double FeeParams::*fields[] = {&FeeParams::gas_per_audit,     &FeeParams::gas_price_gwei,
                                   &FeeParams::token_price,       &FeeParams::onetime_storage_gas,
                                   &FeeParams::beacon_cost_per_round, &FeeParams::audits_per_year,
                                   &FeeParams::redundancy_factor, &FeeParams::duration_years};
    for (auto f : fields) {
        double prev = -1;
        for (double v : {0.0, 0.1, 1.0, 3.0, 50.0, 1e6}) {
            FeeParams fp = base;
            fp.*f = v;
            EXPECT_GE(annual_cost(fp), prev);
            EXPECT_GE(per_audit_cost(fp), 0.0);
            prev = annual_cost(fp);
        }
    }
}

TEST(Detection, ClosedForm)
{
    EXPECT_NEAR(detection_probability(0.01, 300), 0.9510, 5e-5);
    EXPECT_EQ(detection_probability(0.0, 300), 0.0);
    EXPECT_EQ(detection_probability(1.0, 300), 1.0);
    EXPECT_NEAR(detection_probability(300, 30000, 300), 0.9512, 5e-4);
    EXPECT_EQ(detection_probability(0, 100, 10), 0.0);
    EXPECT_EQ(detection_probability(95, 100, 10), 1.0);
}

TEST(Simulate, HonestRunPaysInFull)
{
    RunConfig cfg;
    cfg.s = 4;
    cfg.k = 20;
    cfg.num = 10;
    cfg.file_bytes = 4000;
    cfg.owner_deposit = 500;
    cfg.provider_deposit = 300;
    Bytes data(cfg.file_bytes, 0x5a);
    auto res = simulate<Bn254Suite>(cfg, data);
    ASSERT_EQ(res.contracts.size(), 1u);
    EXPECT_EQ(res.contracts[0].passes, 10u);
    EXPECT_EQ(res.contracts[0].balances.paid_to_provider, 800u);
    EXPECT_EQ(simulate<Bn254Suite>(cfg, data).ledger, res.ledger);
}

TEST(Simulate, FullCorruptionFailsFirstAudit)
{
    RunConfig cfg;
    cfg.s = 2;
    cfg.k = 5;
    cfg.num = 3;
    cfg.corrupt_fraction = 1;
    Bytes data(1500, 1);
    auto res = simulate<Bn254Suite>(cfg, data);
    EXPECT_EQ(res.contracts[0].first_failure, 0u);
    EXPECT_EQ(res.contracts[0].fails, 3u);
}

TEST(Simulate, ConfigValidation)
{
    RunConfig cfg;
    cfg.k = 0;
    EXPECT_THROW(cfg.validate(), Error);
    EXPECT_THROW(nlohmann::json::parse(R"({"s": 4, "bogus": 1})").get<RunConfig>(), Error);
    auto parsed = nlohmann::json::parse(R"({"s": 4, "k": 9, "corrupt_fraction": 0.25})").get<RunConfig>();
    EXPECT_EQ(parsed.s, 4u);
    EXPECT_EQ(parsed.k, 9u);
    EXPECT_EQ(parsed.corrupt_fraction, 0.25);
}
