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

#include "nrxsim/mmse_rx.hpp"

#include <cmath>
#include <vector>

namespace nrxsim {

namespace {

constexpr double kDelayThresholdFactor = 3.0;

} // namespace

ReceiverResult decode_slot_llrs(std::vector<float> llrs, const SlotContext& ctx,
                                int max_iters) {
    descramble_llrs(llrs, ctx.scrambling);
    std::vector<float> full = ctx.codec->rate_recover(llrs, ctx.rv);
    DecodeResult dec = ctx.codec->decode(full, max_iters);
    ReceiverResult res;
    res.block = std::move(dec.block);
    res.crc_pass = dec.crc_pass;
    res.decode_iterations = dec.iterations;
    return res;
}

ChannelEstimate mmse_channel_estimate(const ResourceGrid& rx, const DmrsPattern& dmrs,
                                      const GridConfig& cfg) {
    const int n_sc = rx.n_subcarriers;
    const int n_sym = rx.n_symbols;
    const int n_pilots = n_sc / 2;
    const int n_dmrs = static_cast<int>(cfg.dmrs_symbols.size());

    ChannelEstimate est;
    est.n_antennas = rx.n_antennas;
    est.n_symbols = n_sym;
    est.n_subcarriers = n_sc;
    est.h_hat.assign(rx.samples.size(), cf32{});
    est.noise_est = estimate_noise_from_pilots(rx, dmrs, cfg);

    // twiddle tables for the pilot-grid DFT pair
    std::vector<cf64> fwd(static_cast<std::size_t>(n_pilots) * n_pilots);
    for (int tau = 0; tau < n_pilots; ++tau)
        for (int p = 0; p < n_pilots; ++p)
            fwd[static_cast<std::size_t>(tau) * n_pilots + p] =
                std::polar(1.0 / n_pilots, 2.0 * M_PI * p * tau / n_pilots);

    const double bin_floor = est.noise_est / n_pilots;
    double kept_frac_acc = 0.0;

    std::vector<cf64> ls(n_pilots);
    std::vector<cf64> delay(n_pilots);
    for (int a = 0; a < rx.n_antennas; ++a) {
        // denoised per-DMRS-symbol estimates on the full subcarrier grid
        std::vector<std::vector<cf64>> rows(n_dmrs, std::vector<cf64>(n_sc, cf64{}));
        for (int d = 0; d < n_dmrs; ++d) {
            int t = cfg.dmrs_symbols[d];
            for (int p = 0; p < n_pilots; ++p)
                ls[p] = static_cast<cf64>(rx.at(a, t, 2 * p)) /
                        static_cast<cf64>(dmrs.pilot(t, 2 * p));
            // to delay domain
            int kept = 0;
            for (int tau = 0; tau < n_pilots; ++tau) {
                cf64 g{};
                const cf64* w = &fwd[static_cast<std::size_t>(tau) * n_pilots];
                for (int p = 0; p < n_pilots; ++p) g += w[p] * ls[p];
                if (std::norm(g) > kDelayThresholdFactor * bin_floor) {
                    delay[tau] = g;
                    ++kept;
                } else {
                    delay[tau] = cf64{};
                }
            }
            kept_frac_acc += static_cast<double>(kept) / n_pilots;
            // back to the full grid; subcarrier f sits at fractional pilot index f/2
            for (int f = 0; f < n_sc; ++f) {
                cf64 v{};
                for (int tau = 0; tau < n_pilots; ++tau) {
                    if (delay[tau] == cf64{}) continue;
                    v += delay[tau] * std::polar(1.0, -2.0 * M_PI * (f * 0.5) * tau / n_pilots);
                }
                rows[d][f] = v;
            }
        }
        // Wiener smoothing across time, static prior: shrunk average of the
        // per-DMRS estimates applied to every symbol
        double power = 0.0;
        std::vector<cf64> avg(n_sc);
        for (int f = 0; f < n_sc; ++f) {
            cf64 m{};
            for (int d = 0; d < n_dmrs; ++d) m += rows[d][f];
            m /= static_cast<double>(n_dmrs);
            avg[f] = m;
            power += std::norm(m);
        }
        power /= n_sc;
        double res_var = est.noise_est * (kept_frac_acc / ((a + 1.0) * n_dmrs)) / n_dmrs;
        double sig = std::max(power - res_var, 1e-12);
        double shrink = sig / (sig + res_var);
        for (int t = 0; t < n_sym; ++t)
            for (int f = 0; f < n_sc; ++f)
                est.at(a, t, f) = static_cast<cf32>(shrink * avg[f]);
    }

    double kept_frac = kept_frac_acc / (rx.n_antennas * n_dmrs);
    double post_var = est.noise_est * kept_frac / n_dmrs;
    est.err_var.assign(static_cast<std::size_t>(n_sym) * n_sc, static_cast<float>(post_var));
    return est;
}

ReceiverResult mmse_reference_rx(const SlotContext& ctx) {
    const ResourceGrid& rx = *ctx.rx;
    const GridConfig& cfg = *ctx.grid;
    ChannelEstimate est = mmse_channel_estimate(rx, *ctx.dmrs, cfg);

    const double sigma2 = std::max(est.noise_est + static_cast<double>(est.err_at(0, 0)),
                                   1e-12);
    auto positions = data_re_positions(cfg);
    std::vector<float> llrs(positions.size() * kBitsPerSymbol);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        auto [t, f] = positions[i];
        // per-RE LMMSE combining across antennas: x_hat = h^H y / (|h|^2 + s2)
        cf64 num{};
        double hh = 0.0;
        for (int a = 0; a < rx.n_antennas; ++a) {
            cf64 h = static_cast<cf64>(est.at(a, t, f));
            num += std::conj(h) * static_cast<cf64>(rx.at(a, t, f));
            hh += std::norm(h);
        }
        double denom = hh + sigma2;
        cf64 x_hat = num / denom;
        double mu = hh / denom;                       // effective gain after combining
        double nv = sigma2 * hh / (denom * denom);    // effective noise variance
        nv = std::max(nv, 1e-12);
        auto l = qam16_demap(static_cast<cf32>(x_hat), cf32{static_cast<float>(mu), 0.0f},
                             static_cast<float>(nv));
        for (int b = 0; b < kBitsPerSymbol; ++b)
            llrs[i * kBitsPerSymbol + b] = l[b];
    }
    ReceiverResult res = decode_slot_llrs(llrs, ctx);
    res.llrs = std::move(llrs);
    return res;
}

} // namespace nrxsim
