/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 the nrxsim authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "nrxsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace nrxsim {

namespace {

// R(dt) = J0(2*pi*fd*dt); series for small x, asymptotic form beyond.
double bessel_j0(double x) {
    x = std::fabs(x);
    if (x < 8.0) {
        double y = x * x;
        double p1 = -2957821389.0 + y * (7062834065.0 + y * (-512359803.6 +
                    y * (10879881.29 + y * (-86327.92757 + y * 228.4622733))));
        double p2 = 40076544269.0 + y * (745249964.8 + y * (7189466.438 +
                    y * (47447.26470 + y * (226.1030244 + y))));
        return p1 / p2;
    }
    double z = 8.0 / x;
    double y = z * z;
    double xx = x - 0.785398164;
    double p1 = 1.0 + y * (-0.1098628627e-2 + y * (0.2734510407e-4 +
                y * (-0.2073370639e-5 + y * 0.2093887211e-6)));
    double p2 = -0.1562499995e-1 + y * (0.1430488765e-3 + y * (-0.6911147651e-5 +
                y * (0.7621095161e-6 + y * -0.934935152e-7)));
    return std::sqrt(0.636619772 / x) * (std::cos(xx) * p1 - z * std::sin(xx) * p2);
}

// Lower Cholesky factor of the Jakes time-correlation matrix over one slot.
std::vector<double> jakes_cholesky(int n, double doppler_hz) {
    std::vector<double> r(n * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r[i * n + j] = bessel_j0(2.0 * M_PI * doppler_hz * kSymbolDurationS * (i - j));
    for (int i = 0; i < n; ++i) r[i * n + i] += 1e-9; // keep PD at tiny Doppler
    std::vector<double> l(n * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = r[i * n + j];
            for (int k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
            if (i == j)
                l[i * n + i] = std::sqrt(std::max(s, 1e-15));
            else
                l[i * n + j] = s / l[j * n + j];
        }
    }
    return l;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(trim(tok)));
    return out;
}

std::string format_list(const std::vector<double>& v) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) ss << ", ";
        ss << v[i];
    }
    return ss.str();
}

} // namespace

UeProfile UeProfile::by_name(const std::string& name) {
    if (name == "ue0") return UeProfile{"ue0", 100.0, 0.02, 0.0};
    if (name == "ue1") return UeProfile{"ue1", -100.0, 0.03, -0.2};
    if (name == "clean") return UeProfile{"clean", 0.0, 0.0, 0.0};
    throw ContractError("unknown UE profile: " + name);
}

std::vector<double> ScenarioConfig::normalized_tap_powers() const {
    require(!tap_powers_db.empty() && tap_powers_db.size() == tap_delays_s.size(),
            "ScenarioConfig: tap delay/power size mismatch");
    require(tap_delays_s.size() <= 16, "ScenarioConfig: more than 16 taps");
    std::vector<double> p(tap_powers_db.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = db_to_linear(tap_powers_db[i]);
        sum += p[i];
    }
    for (auto& v : p) v /= sum;
    return p;
}

ChannelRealization draw_channel(const ScenarioConfig& scenario, const GridConfig& grid,
                                std::uint64_t slot_index) {
    const int n_ant = grid.n_rx_antennas;
    const int n_sym = grid.n_symbols;
    const int n_sc = grid.n_subcarriers();
    const auto powers = scenario.normalized_tap_powers();
    const int n_taps = static_cast<int>(powers.size());

    ChannelRealization out;
    out.n_antennas = n_ant;
    out.n_symbols = n_sym;
    out.n_subcarriers = n_sc;
    out.h.assign(static_cast<std::size_t>(n_ant) * n_sym * n_sc, cf32{});

    const bool time_varying = scenario.doppler_max_hz > 0.0;
    std::vector<double> chol;
    if (time_varying) chol = jakes_cholesky(n_sym, scenario.doppler_max_hz);

    Prng los_rng = Prng::keyed(scenario.seed, Stream::kChannelLos, slot_index);
    const bool is_los = los_rng.uniform() < scenario.los_probability;
    const double k_lin = db_to_linear(scenario.los_k_factor_db);
    const double los_amp = std::sqrt(k_lin / (k_lin + 1.0));
    const double nlos_amp = std::sqrt(1.0 / (k_lin + 1.0));

    // per-tap frequency phasors e^{-j 2 pi f df tau}
    std::vector<cf64> phasor(static_cast<std::size_t>(n_taps) * n_sc);
    for (int k = 0; k < n_taps; ++k) {
        double step = -2.0 * M_PI * kSubcarrierSpacingHz * scenario.tap_delays_s[k];
        for (int f = 0; f < n_sc; ++f)
            phasor[k * n_sc + f] = std::polar(1.0, step * f);
    }

    std::vector<cf64> gains(n_sym);
    std::vector<cf64> w(n_sym);
    for (int a = 0; a < n_ant; ++a) {
        std::vector<cf64> hrow(static_cast<std::size_t>(n_sym) * n_sc, cf64{});
        for (int k = 0; k < n_taps; ++k) {
            Prng rng = Prng::keyed(scenario.seed, Stream::kChannelTaps, slot_index,
                                   static_cast<std::uint64_t>(a) * 64 + k);
            if (time_varying) {
                for (int t = 0; t < n_sym; ++t) w[t] = rng.cnormal();
                for (int t = 0; t < n_sym; ++t) {
                    cf64 g{};
                    for (int u = 0; u <= t; ++u) g += chol[t * n_sym + u] * w[u];
                    gains[t] = g;
                }
            } else {
                cf64 g = rng.cnormal();
                for (int t = 0; t < n_sym; ++t) gains[t] = g;
            }
            double amp = std::sqrt(powers[k]);
            if (is_los && k == 0) {
                cf64 steer = std::polar(1.0, 2.0 * M_PI * rng.uniform());
                for (int t = 0; t < n_sym; ++t)
                    gains[t] = los_amp * steer + nlos_amp * gains[t];
            }
            for (int t = 0; t < n_sym; ++t) {
                cf64 g = amp * gains[t];
                const cf64* ph = &phasor[static_cast<std::size_t>(k) * n_sc];
                cf64* dst = &hrow[static_cast<std::size_t>(t) * n_sc];
                for (int f = 0; f < n_sc; ++f) dst[f] += g * ph[f];
            }
        }
        for (int t = 0; t < n_sym; ++t)
            for (int f = 0; f < n_sc; ++f)
                out.at(a, t, f) = static_cast<cf32>(hrow[static_cast<std::size_t>(t) * n_sc + f]);
    }

    Prng jit = Prng::keyed(scenario.seed, Stream::kSnrJitter, slot_index);
    double snr_db = scenario.snr_target_db +
                    jit.uniform(-scenario.snr_jitter_db, scenario.snr_jitter_db);
    out.noise_var = db_to_linear(-snr_db);
    return out;
}

ApplyResult apply_channel(const ResourceGrid& tx, const ChannelRealization& ch,
                          const UeProfile& ue, std::uint64_t scenario_seed,
                          std::uint64_t slot_index) {
    require(tx.n_antennas == 1, "apply_channel: tx grid must be single-antenna");
    require(tx.n_symbols == ch.n_symbols && tx.n_subcarriers == ch.n_subcarriers,
            "apply_channel: shape mismatch");

    const double amp = std::pow(10.0, ue.tx_power_offset_db / 20.0);
    // per-symbol common phase: CFO ramp plus phase-noise random walk
    Prng pn = Prng::keyed(scenario_seed, Stream::kPhaseNoise, slot_index);
    std::vector<cf64> rot(tx.n_symbols);
    double phi = 0.0;
    for (int t = 0; t < tx.n_symbols; ++t) {
        if (t > 0) phi += ue.phase_noise_std * pn.normal();
        double total = 2.0 * M_PI * ue.cfo_hz * kSymbolDurationS * t + phi;
        rot[t] = std::polar(1.0, total);
    }

    ApplyResult res;
    res.rx = ResourceGrid(ch.n_antennas, ch.n_symbols, ch.n_subcarriers);
    const double noise_amp = std::sqrt(ch.noise_var);
    double sig_power = 0.0;
    for (int a = 0; a < ch.n_antennas; ++a) {
        Prng noise = Prng::keyed(scenario_seed, Stream::kNoise, slot_index, a);
        for (int t = 0; t < ch.n_symbols; ++t) {
            for (int f = 0; f < ch.n_subcarriers; ++f) {
                cf64 x = static_cast<cf64>(tx.at(0, t, f)) * amp * rot[t];
                cf64 s = static_cast<cf64>(ch.at(a, t, f)) * x;
                sig_power += std::norm(s);
                cf64 y = s + noise_amp * noise.cnormal();
                res.rx.at(a, t, f) = static_cast<cf32>(y);
            }
        }
    }
    res.signal_power = sig_power / static_cast<double>(res.rx.samples.size());
    return res;
}

ScenarioConfig PretrainDistribution::draw(std::uint64_t index) const {
    Prng rng = Prng::keyed(seed_, Stream::kScenarioDraw, index);
    ScenarioConfig sc;
    sc.name = "pretrain";
    double ds = rng.uniform(10e-9, 300e-9);
    constexpr int kTaps = 8;
    sc.tap_delays_s.assign(kTaps, 0.0);
    sc.tap_powers_db.assign(kTaps, 0.0);
    for (int k = 1; k < kTaps; ++k) sc.tap_delays_s[k] = rng.uniform(0.0, 3.0 * ds);
    std::sort(sc.tap_delays_s.begin(), sc.tap_delays_s.end());
    for (int k = 0; k < kTaps; ++k)
        sc.tap_powers_db[k] = linear_to_db(std::exp(-sc.tap_delays_s[k] / ds));
    sc.doppler_max_hz = rng.uniform(0.0, 200.0);
    sc.snr_target_db = rng.uniform(4.0, 10.0);
    sc.snr_jitter_db = 0.0;
    sc.los_probability = 0.0;
    sc.ue = UeProfile::by_name("clean");
    sc.seed = splitmix64(seed_ ^ (index * 0x9e3779b97f4a7c15ULL));
    return sc;
}

ScenarioConfig scenario_preset(const std::string& name) {
    ScenarioConfig sc;
    sc.name = name;
    if (name == "small-lab") {
        sc.tap_delays_s = {0.0, 30e-9, 60e-9, 90e-9};
        sc.tap_powers_db = {0.0, -4.0, -8.0, -12.0};
        sc.doppler_max_hz = 4.0;
        sc.los_probability = 0.85;
        sc.los_k_factor_db = 10.0;
        sc.snr_jitter_db = 1.5;
        sc.ue = UeProfile::by_name("ue0");
        sc.seed = 4101;
    } else if (name == "office-floor") {
        sc.tap_delays_s = {0.0, 60e-9, 150e-9, 250e-9, 380e-9, 450e-9};
        sc.tap_powers_db = {0.0, -2.0, -4.0, -7.0, -10.0, -13.0};
        sc.doppler_max_hz = 8.0;
        sc.los_probability = 0.4;
        sc.los_k_factor_db = 7.0;
        sc.snr_jitter_db = 1.5;
        sc.ue = UeProfile::by_name("ue0");
        sc.seed = 4202;
    } else if (name == "outdoor-uav") {
        sc.tap_delays_s = {0.0, 40e-9, 80e-9, 160e-9, 240e-9};
        sc.tap_powers_db = {0.0, -3.0, -6.0, -9.0, -12.0};
        sc.doppler_max_hz = 400.0;
        sc.los_probability = 0.6;
        sc.los_k_factor_db = 9.0;
        sc.snr_jitter_db = 1.5;
        sc.ue = UeProfile::by_name("ue1");
        sc.seed = 4303;
    } else if (name == "noiseless") {
        // diagnostic preset: flat static channel, effectively no noise
        sc.tap_delays_s = {0.0};
        sc.tap_powers_db = {0.0};
        sc.doppler_max_hz = 0.0;
        sc.los_probability = 1.0;
        sc.los_k_factor_db = 60.0;
        sc.snr_target_db = 150.0;
        sc.ue = UeProfile::by_name("clean");
        sc.seed = 4404;
    } else {
        throw ContractError("unknown scenario preset: " + name);
    }
    return sc;
}

ScenarioConfig load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    ScenarioConfig sc;
    if (kv.count("preset")) sc = scenario_preset(kv["preset"]);
    if (kv.count("name")) sc.name = kv["name"];
    if (kv.count("tap_delays_ns")) {
        sc.tap_delays_s = parse_list(kv["tap_delays_ns"]);
        for (auto& v : sc.tap_delays_s) v *= 1e-9;
    }
    if (kv.count("tap_powers_db")) sc.tap_powers_db = parse_list(kv["tap_powers_db"]);
    if (kv.count("doppler_max_hz")) sc.doppler_max_hz = std::stod(kv["doppler_max_hz"]);
    if (kv.count("snr_target_db")) sc.snr_target_db = std::stod(kv["snr_target_db"]);
    if (kv.count("snr_jitter_db")) sc.snr_jitter_db = std::stod(kv["snr_jitter_db"]);
    if (kv.count("los_probability")) sc.los_probability = std::stod(kv["los_probability"]);
    if (kv.count("los_k_factor_db")) sc.los_k_factor_db = std::stod(kv["los_k_factor_db"]);
    if (kv.count("ue")) sc.ue = UeProfile::by_name(kv["ue"]);
    if (kv.count("seed")) sc.seed = std::stoull(kv["seed"]);
    return sc;
}

void save_scenario_file(const ScenarioConfig& sc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scenario file: " + path);
    std::vector<double> delays_ns(sc.tap_delays_s);
    for (auto& v : delays_ns) v *= 1e9;
    out << "name = " << sc.name << "\n";
    out << "tap_delays_ns = " << format_list(delays_ns) << "\n";
    out << "tap_powers_db = " << format_list(sc.tap_powers_db) << "\n";
    out << "doppler_max_hz = " << sc.doppler_max_hz << "\n";
    out << "snr_target_db = " << sc.snr_target_db << "\n";
    out << "snr_jitter_db = " << sc.snr_jitter_db << "\n";
    out << "los_probability = " << sc.los_probability << "\n";
    out << "los_k_factor_db = " << sc.los_k_factor_db << "\n";
    out << "ue = " << sc.ue.name << "\n";
    out << "seed = " << sc.seed << "\n";
}

} // namespace nrxsim
