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

#ifndef SATSWARM_COMMON_HPP
#define SATSWARM_COMMON_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace satswarm
{

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = std::numbers::pi;

// Unit conversions. Everything inside the library is SI (m, rad, W);
// the CLI and config files speak km, degrees, dBW and dBi.
inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }
inline constexpr double km_to_m(double km) { return km * 1000.0; }
inline constexpr double m_to_km(double m) { return m / 1000.0; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

enum class ErrorCode
{
    InvalidConfig = 1,
    InvalidInput,
    NoConvergence,
    NoRoot,
    NumericalError,
    IoError,
};

const char *to_string(ErrorCode code) noexcept;

// Single exception type for the library; the code drives the C API status and
// the CLI exit code.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) { throw Error(code, what); }

} // namespace satswarm

#endif
