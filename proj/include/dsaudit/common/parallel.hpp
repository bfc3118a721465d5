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
#include <functional>
#include <thread>
#include <vector>

#include "dsaudit/algebra/counters.hpp"

namespace dsaudit {

/// Runs fn(begin, end) over contiguous slices of [0, n). Each index is
/// handled by exactly one worker, so results written per index do not
/// depend on scheduling. Workers' operation tallies are added to the
/// caller's.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                         std::size_t min_per_worker = 64)
{
    std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(1, n / min_per_worker));
    if (workers <= 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<algebra::OpCounters> tallies(workers);
    const std::size_t step = (n + workers - 1) / workers;
    for (std::size_t begin = 0, w = 0; begin < n; begin += step, ++w) {
        pool.emplace_back([&fn, &tallies, w, begin, end = std::min(n, begin + step)] {
            fn(begin, end);
            tallies[w] = algebra::op_counters();
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& c : tallies) algebra::op_counters() += c;
}

} // namespace dsaudit
