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

#ifndef SATSWARM_ENGINE_HPP
#define SATSWARM_ENGINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "satswarm/rates.hpp"
#include "satswarm/scenario.hpp"

namespace satswarm
{

struct SweepRecord
{
    double axis_value = 0.0; // display units of the axis
    RateMetrics mean;
    RateMetrics std;         // sample standard deviation over trials
    RateMetrics median;
    int num_trials = 0;
    std::string config_digest;
};

struct SweepResult
{
    SweepAxis axis = SweepAxis::InterSatDistance;
    std::vector<SweepRecord> records;
};

struct RunOptions
{
    unsigned threads = 0; // 0: hardware concurrency
};

/// One Monte Carlo realization: places the swarm, draws channels from the
/// stream keyed by (seed, time_index, trial) and evaluates every rate.
///
/// The key deliberately excludes the swept DS / power value, so neighbouring
/// sweep points share their random draws and the curves stay smooth enough
/// for peak detection.
RateReport run_point(const ScenarioConfig &cfg, double theta_mean, double ds, double total_power,
                     std::uint64_t trial, std::uint64_t time_index = 0);

/// Runs every sweep point. Work units (point, trial) may execute on several
/// threads; results are merged in index order so the output does not depend
/// on the thread count. The first failing point (in sweep order) is rethrown
/// with the axis value in its message.
SweepResult run_sweep(const ScenarioConfig &cfg, const RunOptions &options = {});

} // namespace satswarm

#endif
