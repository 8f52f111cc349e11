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

#include "satswarm/common.hpp"
#include "satswarm/random.hpp"

namespace satswarm
{

const char *to_string(ErrorCode code) noexcept
{
    switch (code)
    {
    case ErrorCode::InvalidConfig:
        return "invalid configuration";
    case ErrorCode::InvalidInput:
        return "invalid input";
    case ErrorCode::NoConvergence:
        return "no convergence";
    case ErrorCode::NoRoot:
        return "no root";
    case ErrorCode::NumericalError:
        return "numerical error";
    case ErrorCode::IoError:
        return "i/o error";
    }
    return "unknown error";
}

RandomStream::RandomStream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys)
{
    std::vector<std::uint32_t> words;
    words.reserve(2 * (keys.size() + 1));
    auto push = [&](std::uint64_t v)
    {
        words.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
        words.push_back(static_cast<std::uint32_t>(v >> 32));
    };
    push(seed);
    for (auto k : keys)
        push(k);
    std::seed_seq seq(words.begin(), words.end());
    engine_.seed(seq);
}

} // namespace satswarm
