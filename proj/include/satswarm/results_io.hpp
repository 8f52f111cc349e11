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

#ifndef SATSWARM_RESULTS_IO_HPP
#define SATSWARM_RESULTS_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "satswarm/engine.hpp"

namespace satswarm
{

enum class ResultFormat
{
    Csv,
    Json,
};

/// CSV (one row per record, 17 significant digits) or JSON. Throws
/// InvalidInput for an empty record list.
std::string serialize_results(const SweepResult &result, ResultFormat format);

/// Inverse of serialize_results. CSV carries no axis column, so the caller
/// supplies it.
SweepResult parse_results(std::string_view text, ResultFormat format,
                          SweepAxis csv_axis = SweepAxis::InterSatDistance);

/// Writes <dir>/<stem>_<digest>.<ext>, creating dir if needed. Returns the path.
std::filesystem::path write_results(const SweepResult &result, ResultFormat format,
                                    const std::filesystem::path &dir, const std::string &stem);

} // namespace satswarm

#endif
