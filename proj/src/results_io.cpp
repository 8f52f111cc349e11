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

#include "satswarm/results_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace satswarm
{

namespace
{

constexpr std::array<const char *, 5> kMetricNames = {"r_opt", "r_per", "r_lin_geo", "r_lin_opt_eq", "r_upper"};

std::array<double *, 5> fields(RateMetrics &m) { return {&m.r_opt, &m.r_per, &m.r_lin_geo, &m.r_lin_opt_eq, &m.r_upper}; }

std::array<double, 5> values(const RateMetrics &m) { return {m.r_opt, m.r_per, m.r_lin_geo, m.r_lin_opt_eq, m.r_upper}; }

void put_number(std::string &out, double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    out.append(buf, res.ptr);
}

double get_number(std::string_view s)
{
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        fail(ErrorCode::InvalidInput, "malformed number '" + std::string(s) + "' in results");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;)
    {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

std::string csv_header()
{
    std::string h = "axis_value";
    for (const char *suffix : {"", "_std", "_median"})
        for (const char *name : kMetricNames)
            h += std::string(",") + name + suffix;
    h += ",trials,config_digest";
    return h;
}

std::string to_csv(const SweepResult &result)
{
    std::string out = csv_header() + "\n";
    for (const auto &r : result.records)
    {
        put_number(out, r.axis_value);
        for (const RateMetrics *m : {&r.mean, &r.std, &r.median})
            for (double v : values(*m))
            {
                out.push_back(',');
                put_number(out, v);
            }
        out += "," + std::to_string(r.num_trials) + "," + r.config_digest + "\n";
    }
    return out;
}

SweepResult from_csv(std::string_view text, SweepAxis axis)
{
    SweepResult result;
    result.axis = axis;
    auto lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty())
        lines.pop_back();
    if (lines.empty() || lines.front() != csv_header())
        fail(ErrorCode::InvalidInput, "results CSV has an unexpected header");
    for (std::size_t i = 1; i < lines.size(); ++i)
    {
        const auto cells = split(lines[i], ',');
        if (cells.size() != 18)
            fail(ErrorCode::InvalidInput, "results CSV row " + std::to_string(i) + " has the wrong column count");
        SweepRecord r;
        r.axis_value = get_number(cells[0]);
        std::size_t c = 1;
        for (RateMetrics *m : {&r.mean, &r.std, &r.median})
            for (double *f : fields(*m))
                *f = get_number(cells[c++]);
        r.num_trials = static_cast<int>(get_number(cells[16]));
        r.config_digest = std::string(cells[17]);
        result.records.push_back(std::move(r));
    }
    return result;
}

nlohmann::json metrics_json(const RateMetrics &m)
{
    nlohmann::json j;
    const auto v = values(m);
    for (std::size_t i = 0; i < kMetricNames.size(); ++i)
        j[kMetricNames[i]] = v[i];
    return j;
}

RateMetrics metrics_from_json(const nlohmann::json &j)
{
    RateMetrics m;
    const auto f = fields(m);
    for (std::size_t i = 0; i < kMetricNames.size(); ++i)
        *f[i] = j.at(kMetricNames[i]).get<double>();
    return m;
}

} // namespace

std::string serialize_results(const SweepResult &result, ResultFormat format)
{
    if (result.records.empty())
        fail(ErrorCode::InvalidInput, "no sweep records to serialize");
    if (format == ResultFormat::Csv)
        return to_csv(result);

    nlohmann::json j;
    j["axis"] = axis_name(result.axis);
    j["unit"] = axis_unit(result.axis);
    j["records"] = nlohmann::json::array();
    for (const auto &r : result.records)
    {
        j["records"].push_back({{"axis_value", r.axis_value},
                                {"mean", metrics_json(r.mean)},
                                {"std", metrics_json(r.std)},
                                {"median", metrics_json(r.median)},
                                {"num_trials", r.num_trials},
                                {"config_digest", r.config_digest}});
    }
    return j.dump(2) + "\n";
}

SweepResult parse_results(std::string_view text, ResultFormat format, SweepAxis csv_axis)
{
    if (format == ResultFormat::Csv)
        return from_csv(text, csv_axis);

    try
    {
        const auto j = nlohmann::json::parse(text);
        SweepResult result;
        const auto axis = parse_axis(j.at("axis").get<std::string>());
        if (!axis)
            fail(ErrorCode::InvalidInput, "results JSON names an unknown axis");
        result.axis = *axis;
        for (const auto &rj : j.at("records"))
        {
            SweepRecord r;
            r.axis_value = rj.at("axis_value").get<double>();
            r.mean = metrics_from_json(rj.at("mean"));
            r.std = metrics_from_json(rj.at("std"));
            r.median = metrics_from_json(rj.at("median"));
            r.num_trials = rj.at("num_trials").get<int>();
            r.config_digest = rj.at("config_digest").get<std::string>();
            result.records.push_back(std::move(r));
        }
        return result;
    }
    catch (const nlohmann::json::exception &e)
    {
        fail(ErrorCode::InvalidInput, std::string("malformed results JSON: ") + e.what());
    }
}

std::filesystem::path write_results(const SweepResult &result, ResultFormat format,
                                    const std::filesystem::path &dir, const std::string &stem)
{
    const std::string text = serialize_results(result, format);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        fail(ErrorCode::IoError, "cannot create output directory '" + dir.string() + "': " + ec.message());

    const auto path = dir / (stem + "_" + result.records.front().config_digest +
                             (format == ResultFormat::Csv ? ".csv" : ".json"));
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
    out << text;
    out.close();
    if (!out)
        fail(ErrorCode::IoError, "failed writing '" + path.string() + "'");
    return path;
}

} // namespace satswarm
