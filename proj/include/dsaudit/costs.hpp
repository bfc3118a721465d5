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

namespace dsaudit::costs {

/// Prices are inputs; nothing here is fetched live.
struct FeeParams {
    double gas_per_audit = 589000;
    double gas_price_gwei = 5;       ///< 1 gwei = 1e-9 token
    double token_price = 143;        ///< fiat per token
    double onetime_storage_gas = 0;  ///< key/metadata storage, paid once
    double beacon_cost_per_round = 0;
    double audits_per_year = 365;
    double redundancy_factor = 1;    ///< contracts per file, e.g. 10 shards
    double duration_years = 1;
};

inline double gas_to_fiat(double gas, const FeeParams& fp) { return gas * fp.gas_price_gwei * 1e-9 * fp.token_price; }

inline double per_audit_cost(const FeeParams& fp) { return gas_to_fiat(fp.gas_per_audit, fp) + fp.beacon_cost_per_round; }

inline double onetime_cost(const FeeParams& fp) { return gas_to_fiat(fp.onetime_storage_gas, fp); }

/// Recurring audit spend over the whole term, plus the one-time storage cost.
inline double annual_cost(const FeeParams& fp)
{
    return per_audit_cost(fp) * fp.audits_per_year * fp.redundancy_factor * fp.duration_years + onetime_cost(fp);
}

} // namespace dsaudit::costs
