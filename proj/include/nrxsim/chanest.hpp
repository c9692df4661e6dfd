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

#include "nrxsim/grid.hpp"

namespace nrxsim {

struct ChannelEstimate {
    int n_antennas = 0;
    int n_symbols = 0;
    int n_subcarriers = 0;
    std::vector<cf32> h_hat;
    std::vector<float> err_var;  // per (symbol, subcarrier)
    double noise_est = 0.0;      // N0 estimate from pilots

    cf32 at(int a, int t, int f) const {
        return h_hat[(static_cast<std::size_t>(a) * n_symbols + t) * n_subcarriers + f];
    }
    cf32& at(int a, int t, int f) {
        return h_hat[(static_cast<std::size_t>(a) * n_symbols + t) * n_subcarriers + f];
    }
    float err_at(int t, int f) const {
        return err_var[static_cast<std::size_t>(t) * n_subcarriers + f];
    }
};

/// Raw least-squares estimate: y/p at pilots, nearest-pilot hold in frequency,
/// linear interpolation in time between DMRS symbols (held at slot edges).
ChannelEstimate ls_estimate(const ResourceGrid& rx, const DmrsPattern& dmrs,
                            const GridConfig& cfg);

/// N0 estimate from half the mean squared difference of adjacent pilot LS
/// values (the channel is nearly constant across one comb step).
double estimate_noise_from_pilots(const ResourceGrid& rx, const DmrsPattern& dmrs,
                                  const GridConfig& cfg);

} // namespace nrxsim
