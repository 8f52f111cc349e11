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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Long-running; registered under ctest with a generous
// timeout.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "satswarm/engine.hpp"
#include "satswarm/results_io.hpp"
#include "satswarm/spacing.hpp"

using namespace satswarm;

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int g_failed = 0;

void verdict(int id, const std::string &title, bool ok, const std::string &detail)
{
    std::printf("%s  [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++g_failed;
}

void note(const char *fmt, ...) __attribute__((format(printf, 1, 2)));
void note(const char *fmt, ...)
{
    va_list ap;
    va_start(ap, fmt);
    std::printf("      ");
    std::vprintf(fmt, ap);
    std::printf("\n");
    va_end(ap);
    std::fflush(stdout);
}

std::string fmt(const char *f, double a) { char b[128]; std::snprintf(b, sizeof b, f, a); return b; }

ScenarioConfig scenario(const std::vector<std::string> &overrides, std::optional<SweepAxis> axis = std::nullopt)
{
    return parse_scenario("", overrides, axis);
}

// ---------------------------------------------------------------------------

void spacing_pin()
{
    SpacingQuery q;
    q.elevation = deg_to_rad(90.0);
    q.rx = 100;
    q.harmonic = 1;
    const auto t0 = Clock::now();
    const SpacingResult r = optimal_spacing(q);
    const double secs = seconds_since(t0);
    const double km = r.ds_orth / 1e3;
    const bool ok = std::abs(km - 12.0) <= 0.05 * 12.0 && secs < 1.0;
    char d[256];
    std::snprintf(d, sizeof d, "DS_orth(90 deg, Nr=100, 600 km, k=1) = %.4f km, target 12 +/- 0.6 km, %.2e s", km,
                  secs);
    verdict(1, "orthogonal spacing at zenith", ok, d);
}

void distance_sweep_shape()
{
    ScenarioConfig cfg = scenario({"sweep.theta_mean_deg=90", "swarm.satellites=3", "power.total_tx_dbw=10",
                                   "simulation.trials=200", "sweep.range={start: 1, stop: 80, step: 1}"},
                                  SweepAxis::InterSatDistance);
    const auto t0 = Clock::now();
    const SweepResult res = run_sweep(cfg);
    const double secs = seconds_since(t0);

    std::vector<double> x, y;
    for (const auto &r : res.records)
    {
        x.push_back(r.axis_value);
        y.push_back(r.mean.r_opt);
    }
    std::vector<std::size_t> maxima;
    for (std::size_t i = 1; i + 1 < y.size(); ++i)
        if (y[i] > y[i - 1] && y[i] >= y[i + 1])
            maxima.push_back(i);

    bool ok = !maxima.empty() && res.records.size() == 80 && secs < 300.0;
    std::string peaks;
    for (std::size_t i : maxima)
        peaks += fmt("%.0f ", x[i]);
    note("sweep of %zu points x %d trials in %.1f s; local maxima at km: %s", res.records.size(), cfg.trials, secs,
         peaks.c_str());

    if (!maxima.empty())
    {
        // rise to the first maximum without an intermediate extremum
        const std::size_t first = maxima.front();
        bool rising = true;
        for (std::size_t i = 1; i <= first; ++i)
            rising = rising && y[i] > y[i - 1];
        const bool first_ok = std::abs(x[first] - 12.0) <= 2.0;
        bool spacing_ok = maxima.size() >= 3;
        for (std::size_t k = 1; k < maxima.size(); ++k)
        {
            const double gap = x[maxima[k]] - x[maxima[k - 1]];
            spacing_ok = spacing_ok && std::abs(gap - 12.0) <= 2.0;
        }
        note("monotone rise to first maximum: %s; first maximum at %.0f km; peak gaps within 12 +/- 2 km: %s",
             rising ? "yes" : "no", x[first], spacing_ok ? "yes" : "no");
        ok = ok && rising && first_ok && spacing_ok;
    }
    char d[256];
    std::snprintf(d, sizeof d, "%zu maxima, first at %.0f km, runtime %.1f s (limit 300 s)", maxima.size(),
                  maxima.empty() ? 0.0 : x[maxima.front()], secs);
    verdict(2, "rate oscillation over inter-satellite distance", ok, d);
}

void pass_average_saturation()
{
    ScenarioConfig cfg = scenario({"sweep.values=[12, 65, 80]", "sweep.time_average=true", "sweep.time_points=121",
                                   "simulation.trials=200"},
                                  SweepAxis::InterSatDistance);
    const auto t0 = Clock::now();
    const SweepResult res = run_sweep(cfg);
    const double secs = seconds_since(t0);
    const double r12 = res.records[0].mean.r_opt;
    const double r65 = res.records[1].mean.r_opt;
    const double r80 = res.records[2].mean.r_opt;
    const double sat = std::abs(r65 - r80) / r80;
    const double drop = (r65 - r12) / r65;
    const bool ok = sat <= 0.01 && drop >= 0.03 && secs < 1200.0;
    char d[320];
    std::snprintf(d, sizeof d,
                  "pass-averaged R_opt: 12 km %.4f, 65 km %.4f, 80 km %.4f; |65-80|/80 = %.3f %% (<= 1 %%), "
                  "12 km is %.2f %% below 65 km (>= 3 %%), %.1f s",
                  r12, r65, r80, 100.0 * sat, 100.0 * drop, secs);
    verdict(3, "saturation of the pass-averaged rate", ok, d);
}

void capacity_ratio()
{
    const auto t0 = Clock::now();
    // whole pass, stochastic link budget switched on (the default)
    ScenarioConfig pass = scenario({"sweep.values=[70]", "sweep.time_average=true", "simulation.trials=200"},
                                   SweepAxis::InterSatDistance);
    const SweepRecord r70 = run_sweep(pass).records.front();
    const double ratio70 = r70.mean.r_lin_geo / r70.mean.r_opt;

    // 10 km snapshots at the start of the pass
    ScenarioConfig snap = scenario({"sweep.values=[10]", "sweep.theta_mean_deg=30", "simulation.trials=200"},
                                   SweepAxis::InterSatDistance);
    const SweepRecord r10 = run_sweep(snap).records.front();
    const double ratio10 = r10.mean.r_lin_geo / r10.mean.r_opt;

    const bool ok = ratio70 >= 0.99 && ratio10 < 0.97;
    char d[320];
    std::snprintf(d, sizeof d,
                  "70 km pass average: R_lin %.4f / R_opt %.4f = %.5f (>= 0.99); 10 km at 30 deg: %.4f / %.4f = "
                  "%.4f (< 0.97), %.1f s",
                  r70.mean.r_lin_geo, r70.mean.r_opt, ratio70, r10.mean.r_lin_geo, r10.mean.r_opt, ratio10,
                  seconds_since(t0));
    verdict(4, "linear scheme against capacity", ok, d);
}

// ---------------------------------------------------------------------------
// property suites

struct Instance
{
    SwarmGeometry swarm;
    ChannelSet ch;
    Precoder G;
    double noise;
    double sigma_bar_sq;
};

Instance physical_instance(std::mt19937_64 &gen, int ns, std::uint64_t key)
{
    std::uniform_real_distribution<double> th(deg_to_rad(30.0), deg_to_rad(150.0));
    std::uniform_real_distribution<double> ds(1e3, 80e3);
    const ScenarioConfig cfg = scenario({});
    ArrayConfig arr = cfg.arrays;
    arr.tx_per_satellite = cfg.total_tx_antennas / ns;
    Instance in;
    in.swarm = place_swarm(th(gen), ds(gen), ns, cfg.orbit);
    RandomStream rng(7, {key});
    in.ch = channel_set(in.swarm, arr, cfg.loss, rng);
    const double rho = cfg.total_tx_power / ns;
    in.G = geometric_precoder(in.swarm, arr, rho);
    in.noise = cfg.noise_power;
    in.sigma_bar_sq = normalized_noise(in.noise, in.ch.sigma_alpha_sq, arr.tx_per_satellite, rho);
    return in;
}

double gamma_of(const ComplexVector &w, const ComplexMatrix &F, Eigen::Index l, double noise)
{
    const double s = std::norm(w.dot(F.col(l)));
    double i = 0.0;
    for (Eigen::Index k = 0; k < F.cols(); ++k)
        if (k != l)
            i += std::norm(w.dot(F.col(k)));
    return s / (i + noise * w.squaredNorm());
}

ComplexMatrix steering_from_cos(const std::vector<double> &c, int nr)
{
    ComplexMatrix A(nr, static_cast<Eigen::Index>(c.size()));
    for (std::size_t l = 0; l < c.size(); ++l)
        A.col(static_cast<Eigen::Index>(l)) = rx_steering(std::acos(std::clamp(c[l], -1.0, 1.0)), nr);
    return A;
}

bool suite(const char *name, const std::function<std::string(bool &)> &body)
{
    bool ok = true;
    std::string detail;
    try
    {
        detail = body(ok);
    }
    catch (const std::exception &e)
    {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    note("%s %s: %s", ok ? "ok  " : "FAIL", name, detail.c_str());
    return ok;
}

void property_suites()
{
    const auto t0 = Clock::now();
    bool all = true;
    std::mt19937_64 gen(20260101);

    all &= suite("chain R_lin <= R_per <= R_opt", [&](bool &ok) {
        std::uniform_real_distribution<double> th(deg_to_rad(30.0), deg_to_rad(150.0));
        std::uniform_real_distribution<double> ds(1e3, 80e3);
        std::uniform_real_distribution<double> pw(-10.0, 30.0);
        const ScenarioConfig cfg = scenario({});
        double worst = -1e300;
        for (int i = 0; i < 1000; ++i)
        {
            const RateReport r = run_point(cfg, th(gen), ds(gen), db_to_linear(pw(gen)), 1000 + i);
            worst = std::max({worst, r.r_lin_geo - r.r_per, r.r_lin_opt_eq - r.r_per, r.r_per - r.r_opt});
        }
        ok = worst <= 1e-9;
        return fmt("1000 realizations, largest violation %.3e", worst);
    });

    all &= suite("waterfilling conservation and dominance", [&](bool &ok) {
        std::uniform_int_distribution<int> len(1, 6);
        std::uniform_real_distribution<double> lg(-3.0, 2.0);
        std::exponential_distribution<double> ex(1.0);
        double worst_sum = 0.0, worst_gap = -1e300;
        for (int inst = 0; inst < 50; ++inst)
        {
            std::vector<double> lambda(static_cast<std::size_t>(len(gen)));
            for (auto &v : lambda)
                v = std::pow(10.0, lg(gen));
            const double P = std::pow(10.0, lg(gen)), noise = 0.3;
            const PowerAllocation a = waterfilling(lambda, P, noise);
            double s = 0.0, best = 0.0;
            for (std::size_t i = 0; i < lambda.size(); ++i)
            {
                s += a.powers[i];
                best += std::log2(1.0 + lambda[i] * a.powers[i] / noise);
            }
            worst_sum = std::max(worst_sum, std::abs(s - P) / P);
            for (int k = 0; k < 10000; ++k)
            {
                std::vector<double> p(lambda.size());
                double t = 0.0;
                for (auto &v : p)
                    t += (v = ex(gen));
                double r = 0.0;
                for (std::size_t i = 0; i < p.size(); ++i)
                    r += std::log2(1.0 + lambda[i] * p[i] * P / t / noise);
                worst_gap = std::max(worst_gap, r - best);
            }
        }
        ok = worst_sum <= 1e-9 && worst_gap <= 1e-12;
        char d[160];
        std::snprintf(d, sizeof d, "50 instances x 10000 allocations, power error %.1e, best random excess %.1e",
                      worst_sum, worst_gap);
        return std::string(d);
    });

    all &= suite("SINR direct vs quadratic form", [&](bool &ok) {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i)
        {
            const Instance in = physical_instance(gen, 2, 5000 + i);
            const Equalizer W = (i % 2) ? optimal_equalizer(in.ch.true_blocks, in.G, in.noise)
                                        : geometric_equalizer(in.ch.rx_steering, in.sigma_bar_sq);
            const auto a = sinr_per_stream(W, in.ch.true_blocks, in.G, in.noise);
            const auto b = sinr_quadratic_form(W, in.ch.true_blocks, in.G, in.noise);
            for (std::size_t l = 0; l < a.size(); ++l)
                worst = std::max(worst, std::abs(a[l] - b[l]) / std::max(std::abs(a[l]), 1e-300));
        }
        ok = worst <= 1e-12;
        return fmt("1000 two-satellite realizations, worst relative gap %.2e", worst);
    });

    all &= suite("capacity determinant vs eigenvalue form", [&](bool &ok) {
        double worst = 0.0;
        for (int i = 0; i < 500; ++i)
        {
            const Instance in = physical_instance(gen, 2 + i % 3, 9000 + i);
            const double P = 10.0;
            const double det = rate_ideal_rx(in.ch.stacked_true, svd_precoder(in.ch.stacked_true, P, in.noise),
                                             in.noise);
            const double eig = capacity_eigen_form(in.ch.stacked_true, P, in.noise);
            worst = std::max(worst, std::abs(det - eig) / eig);
        }
        ok = worst <= 1e-9;
        return fmt("500 realizations, worst relative gap %.2e", worst);
    });

    all &= suite("steering orthogonality at 2k/Nr spacing", [&](bool &ok) {
        const int nr = 100;
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double worst_pair = 0.0, worst_gram = 0.0;
        for (int i = 0; i < 500; ++i)
        {
            const int ns = 2 + i % 4;
            std::vector<double> c{u(gen)};
            for (int l = 1; l < ns; ++l)
                c.push_back(c.back() - 2.0 * (1 + static_cast<int>(gen() % 3)) / nr);
            if (c.back() < -1.0)
                continue;
            const ComplexMatrix A = steering_from_cos(c, nr);
            const ComplexMatrix gram = A.adjoint() * A;
            for (int a = 0; a < ns; ++a)
                for (int b = a + 1; b < ns; ++b)
                    worst_pair = std::max(worst_pair, std::abs(gram(a, b)));
            worst_gram = std::max(worst_gram, (gram - nr * ComplexMatrix::Identity(ns, ns)).cwiseAbs().maxCoeff());
        }
        ok = worst_pair < 1e-9 * nr && worst_gram < 1e-9;
        char d[160];
        std::snprintf(d, sizeof d, "max |a_i^H a_l| = %.2e (< %.0e), max |A^H A - Nr I| = %.2e", worst_pair,
                      1e-9 * nr, worst_gram);
        return std::string(d);
    });

    all &= suite("optimal equalizer is a Rayleigh-quotient maximum", [&](bool &ok) {
        double worst = -1e300;
        for (int inst = 0; inst < 10; ++inst)
        {
            const Instance in = physical_instance(gen, 3, 12000 + inst);
            const Equalizer W = optimal_equalizer(in.ch.true_blocks, in.G, in.noise);
            const ComplexMatrix F = effective_channel(in.ch.true_blocks, in.G);
            std::normal_distribution<double> n(0.0, 1.0);
            for (Eigen::Index l = 0; l < F.cols(); ++l)
            {
                const ComplexVector w = W.matrix.row(l).adjoint();
                const double g0 = gamma_of(w, F, l, in.noise);
                for (int p = 0; p < 1000; ++p)
                {
                    ComplexVector d(w.size());
                    for (Eigen::Index k = 0; k < d.size(); ++k)
                        d(k) = Complex(n(gen), n(gen));
                    const ComplexVector wp = w + 1e-3 * w.norm() * d / d.norm();
                    worst = std::max(worst, (gamma_of(wp, F, l, in.noise) - g0) / g0);
                }
            }
        }
        ok = worst <= 1e-12;
        return fmt("10 instances x 3 streams x 1000 probes, best relative improvement %.2e", worst);
    });

    all &= suite("orthogonal configuration maximizes the bound", [&](bool &ok) {
        const int nr = 100;
        const Instance ref = physical_instance(gen, 3, 1);
        const std::vector<double> c0{0.02, 0.0, -0.02};
        const double best = rate_upper_geo(steering_from_cos(c0, nr), ref.sigma_bar_sq);
        std::normal_distribution<double> eps(0.0, 0.01);
        double worst = -1e300;
        for (int p = 0; p < 1000; ++p)
        {
            std::vector<double> c = c0;
            for (auto &v : c)
                v += eps(gen);
            worst = std::max(worst, rate_upper_geo(steering_from_cos(c, nr), ref.sigma_bar_sq) - best);
        }
        ok = worst <= 1e-9;
        char d[160];
        std::snprintf(d, sizeof d, "orthogonal bound %.4f, best perturbed excess %.2e over 1000 configurations", best,
                      worst);
        return std::string(d);
    });

    all &= suite("bit-identical parallel reruns", [&](bool &ok) {
        const ScenarioConfig cfg = scenario({"sweep.values=[8, 12, 30, 70]", "simulation.trials=25",
                                             "simulation.seed=12345"});
        const std::string a = serialize_results(run_sweep(cfg, {1}), ResultFormat::Csv);
        const std::string b = serialize_results(run_sweep(cfg, {4}), ResultFormat::Csv);
        const std::string c = serialize_results(run_sweep(cfg, {0}), ResultFormat::Csv);
        ok = a == b && a == c;
        return std::string(ok ? "1, 4 and default worker counts give identical bytes" : "outputs differ");
    });

    verdict(5, "property suites", all, fmt("all suites in %.1f s", seconds_since(t0)));
}

void geometry_oracles()
{
    const OrbitConfig orbit;
    const double r0 = orbit.orbital_radius();

    double worst_range = 0.0;
    const double horizon = horizon_polar_angle(orbit);
    for (int i = 0; i <= 10000; ++i)
    {
        const double v = horizon + (kPi - 2.0 * horizon) * i / 10000.0;
        const double cart = std::hypot(r0 * std::cos(v), r0 * std::sin(v) - orbit.earth_radius);
        worst_range = std::max(worst_range, std::abs(slant_range(v, orbit) - cart) / cart);
    }

    double worst_trip = 0.0;
    for (int i = 0; i <= 17000; ++i)
    {
        const double t = deg_to_rad(5.0 + 0.01 * i);
        worst_trip = std::max(worst_trip, std::abs(elevation_from_polar(polar_from_elevation(t, orbit), orbit) - t));
    }

    ArrayConfig arr;
    LossConfig loss;
    double worst_rx = 0.0, worst_tx = 0.0;
    for (double deg = 30.0; deg <= 150.0; deg += 10.0)
    {
        const double theta = deg_to_rad(deg);
        for (double off : {-20.0, 0.0, 20.0})
        {
            const double eta = std::min(theta, kPi / 2) - kPi / 2 + deg_to_rad(off);
            const SatelliteState sat =
                make_satellite(polar_from_elevation(theta, orbit), orbit, PointingPolicy::fixed(eta));
            RandomStream rng(3);
            const ComplexMatrix H = true_channel(sat, orbit, arr, link_budget(sat, arr, loss, rng));
            for (int m = 0; m + 1 < arr.rx; ++m)
                for (int n = 0; n + 1 < arr.tx_per_satellite; ++n)
                {
                    worst_rx = std::max(worst_rx, std::abs(std::remainder(
                                                      std::arg(H(m + 1, n) / H(m, n)) - kPi * std::cos(sat.elevation),
                                                      2.0 * kPi)));
                    worst_tx = std::max(worst_tx, std::abs(std::remainder(
                                                      std::arg(H(m, n + 1) / H(m, n)) - kPi * std::sin(sat.aod),
                                                      2.0 * kPi)));
                }
        }
    }

    const bool ok = worst_range < 1e-6 && worst_trip < 1e-10 && worst_rx < 1e-3 && worst_tx < 1e-3;
    char d[320];
    std::snprintf(d, sizeof d,
                  "slant range vs Cartesian %.1e rel (< 1e-6); elevation round trip %.1e rad (< 1e-10); "
                  "adjacent phase error rx %.1e, tx %.1e rad (< 1e-3)",
                  worst_range, worst_trip, worst_rx, worst_tx);
    verdict(6, "geometry oracles", ok, d);
}

void guarded(const char *what, int id, void (*fn)())
{
    try
    {
        fn();
    }
    catch (const std::exception &e)
    {
        verdict(id, what, false, std::string("exception: ") + e.what());
    }
}

} // namespace

int main()
{
    const auto t0 = Clock::now();
    guarded("orthogonal spacing at zenith", 1, spacing_pin);
    guarded("geometry oracles", 6, geometry_oracles);
    guarded("property suites", 5, property_suites);
    guarded("linear scheme against capacity", 4, capacity_ratio);
    guarded("rate oscillation over inter-satellite distance", 2, distance_sweep_shape);
    guarded("saturation of the pass-averaged rate", 3, pass_average_saturation);
    std::printf("%s: %d criteria failed, %.1f s total\n", g_failed ? "FAILED" : "ALL PASSED", g_failed,
                seconds_since(t0));
    return g_failed ? 1 : 0;
}
