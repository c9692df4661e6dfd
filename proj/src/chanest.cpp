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

#include "nrxsim/chanest.hpp"

#include <cmath>

namespace nrxsim {

double estimate_noise_from_pilots(const ResourceGrid& rx, const DmrsPattern& dmrs,
                                  const GridConfig& cfg) {
    double acc = 0.0;
    std::size_t count = 0;
    for (int a = 0; a < rx.n_antennas; ++a) {
        for (int t : cfg.dmrs_symbols) {
            cf32 prev{};
            bool have_prev = false;
            for (int f = 0; f < rx.n_subcarriers; f += 2) {
                cf32 ls = rx.at(a, t, f) / dmrs.pilot(t, f);
                if (have_prev) {
                    acc += std::norm(ls - prev);
                    ++count;
                }
                prev = ls;
                have_prev = true;
            }
        }
    }
    if (count == 0) return 0.0;
    // difference of two unit-power-pilot LS values carries 2*N0 of noise
    return acc / (2.0 * static_cast<double>(count));
}

ChannelEstimate ls_estimate(const ResourceGrid& rx, const DmrsPattern& dmrs,
                            const GridConfig& cfg) {
    const int n_sym = rx.n_symbols;
    const int n_sc = rx.n_subcarriers;
    ChannelEstimate est;
    est.n_antennas = rx.n_antennas;
    est.n_symbols = n_sym;
    est.n_subcarriers = n_sc;
    est.h_hat.assign(rx.samples.size(), cf32{});
    est.noise_est = estimate_noise_from_pilots(rx, dmrs, cfg);
    est.err_var.assign(static_cast<std::size_t>(n_sym) * n_sc,
                       static_cast<float>(est.noise_est));

    const auto& dsyms = cfg.dmrs_symbols;
    for (int a = 0; a < rx.n_antennas; ++a) {
        // per-DMRS-symbol estimates, nearest-pilot hold across frequency
        std::vector<std::vector<cf32>> rows(dsyms.size(), std::vector<cf32>(n_sc));
        for (std::size_t d = 0; d < dsyms.size(); ++d) {
            int t = dsyms[d];
            for (int f = 0; f < n_sc; f += 2)
                rows[d][f] = rx.at(a, t, f) / dmrs.pilot(t, f);
            for (int f = 1; f < n_sc; f += 2)
                rows[d][f] = rows[d][f - 1]; // nearest pilot, ties toward lower
        }
        // linear interpolation in time, held beyond the outer DMRS symbols
        for (int t = 0; t < n_sym; ++t) {
            std::size_t hi = 0;
            while (hi < dsyms.size() && dsyms[hi] < t) ++hi;
            for (int f = 0; f < n_sc; ++f) {
                cf32 v;
                if (hi == 0) {
                    v = rows[0][f];
                } else if (hi == dsyms.size()) {
                    v = rows[dsyms.size() - 1][f];
                } else {
                    float w = static_cast<float>(t - dsyms[hi - 1]) /
                              static_cast<float>(dsyms[hi] - dsyms[hi - 1]);
                    v = (1.0f - w) * rows[hi - 1][f] + w * rows[hi][f];
                }
                est.at(a, t, f) = v;
            }
        }
    }
    return est;
}

} // namespace nrxsim
