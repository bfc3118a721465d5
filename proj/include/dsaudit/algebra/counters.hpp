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

namespace dsaudit::algebra {

/// Per-thread tallies of the expensive group operations. Verification cost
/// claims are checked against these rather than against wall-clock time.
struct OpCounters {
    std::uint64_t pairings = 0;       ///< Miller-loop pairs evaluated
    std::uint64_t final_exps = 0;
    std::uint64_t g1_exps = 0;        ///< single-point G1 scalar multiplications
    std::uint64_t g2_exps = 0;
    std::uint64_t gt_exps = 0;
    std::uint64_t msm_terms = 0;      ///< points fed into multi-scalar multiplications
    std::uint64_t hash_to_g1 = 0;

    /// Group exponentiations of any kind, counting each MSM term as one.
    OpCounters& operator+=(const OpCounters& o)
    {
        pairings += o.pairings;
        final_exps += o.final_exps;
        g1_exps += o.g1_exps;
        g2_exps += o.g2_exps;
        gt_exps += o.gt_exps;
        msm_terms += o.msm_terms;
        hash_to_g1 += o.hash_to_g1;
        return *this;
    }

    std::uint64_t exponentiations() const { return g1_exps + g2_exps + gt_exps + msm_terms; }
};

inline OpCounters& op_counters()
{
    thread_local OpCounters counters;
    return counters;
}

/// Resets the thread's counters on construction and exposes the tally.
class ScopedOpCount {
public:
    ScopedOpCount() { op_counters() = {}; }
    const OpCounters& counts() const { return op_counters(); }
};

} // namespace dsaudit::algebra
