// SPDX-License-Identifier: Apache-2.0
//
// satswarm: link-level simulator for cooperative satellite swarm downlinks
// Copyright (C) 2026 The satswarm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SATSWARM_RANDOM_HPP
#define SATSWARM_RANDOM_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace satswarm
{

// Random stream keyed by (seed, key...). The same key always yields the same
// sequence, so Monte Carlo work units can run in any order or on any thread.
class RandomStream
{
public:
    explicit RandomStream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys = {});

    double normal() { return normal_(engine_); } // N(0, 1)
    double uniform() { return uniform_(engine_); } // U[0, 1)

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

} // namespace satswarm

#endif
