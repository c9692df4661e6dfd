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

#pragma once

#include <string>
#include <vector>

#include "nrxsim/grid.hpp"
#include "nrxsim/rng.hpp"

namespace nrxsim {

inline constexpr double kSubcarrierSpacingHz = 30e3;
inline constexpr double kSymbolDurationS = 0.5e-3 / kSymbolsPerSlot;

/// Residual UE impairments, fixed per device.
struct UeProfile {
    std::string name = "ue0";
    double cfo_hz = 0.0;
    double phase_noise_std = 0.0; // radians per symbol (random walk)
    double tx_power_offset_db = 0.0;

    static UeProfile by_name(const std::string& name);
    bool operator==(const UeProfile&) const = default;
};

/// Tapped-delay-line site model plus operating point.
struct ScenarioConfig {
    std::string name = "default";
    std::vector<double> tap_delays_s{0.0};
    std::vector<double> tap_powers_db{0.0}; // normalized to sum 1 in linear scale on use
    double doppler_max_hz = 0.0;
    double snr_target_db = 7.0;
    double snr_jitter_db = 0.0;
    double los_probability = 0.0;
    double los_k_factor_db = 10.0;
    UeProfile ue;
    std::uint64_t seed = 0;

    /// Tap powers in linear scale, normalized to sum 1.
    std::vector<double> normalized_tap_powers() const;
};

/// Frequency response per RE plus the slot's noise power.
struct ChannelRealization {
    int n_antennas = 0;
    int n_symbols = 0;
    int n_subcarriers = 0;
    std::vector<cf32> h;
    double noise_var = 0.0;

    cf32 at(int a, int t, int f) const {
        return h[(static_cast<std::size_t>(a) * n_symbols + t) * n_subcarriers + f];
    }
    cf32& at(int a, int t, int f) {
        return h[(static_cast<std::size_t>(a) * n_symbols + t) * n_subcarriers + f];
    }
};

/// Rayleigh/Rician taps, Jakes-correlated across symbols, independent per
/// antenna; E[|h|^2] = 1. Fully determined by (scenario.seed, slot_index).
ChannelRealization draw_channel(const ScenarioConfig& scenario, const GridConfig& grid,
                                std::uint64_t slot_index);

struct ApplyResult {
    ResourceGrid rx;
    double signal_power = 0.0; // realized mean |h x|^2 per RE (Es, incl. channel gain)
};

/// y = h * x * exp(j phi(t)) + n with CFO/phase-noise accumulation and
/// circularly-symmetric Gaussian noise of the realization's variance.
ApplyResult apply_channel(const ResourceGrid& tx, const ChannelRealization& ch,
                          const UeProfile& ue, std::uint64_t scenario_seed,
                          std::uint64_t slot_index);

/// Randomized pretraining distribution: per draw, delay spread in [10, 300] ns,
/// Doppler in [0, 200] Hz, SNR in [4, 10] dB, NLOS, clean UE.
class PretrainDistribution {
public:
    explicit PretrainDistribution(std::uint64_t seed) : seed_(seed) {}
    ScenarioConfig draw(std::uint64_t index) const;
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

/// Built-in site presets: "small-lab", "office-floor", "outdoor-uav".
ScenarioConfig scenario_preset(const std::string& name);

/// Key-value scenario file (one `key = value` per line, '#' comments).
ScenarioConfig load_scenario_file(const std::string& path);
void save_scenario_file(const ScenarioConfig& sc, const std::string& path);

} // namespace nrxsim
