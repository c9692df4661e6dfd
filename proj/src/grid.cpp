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

#include "nrxsim/grid.hpp"

#include <cmath>

#include "nrxsim/scrambler.hpp"

namespace nrxsim {

namespace {

std::uint32_t pilot_c_init(std::uint64_t slot_id, int symbol) {
    // documented pilot seed: mixes the slot counter and the DMRS symbol index
    std::uint64_t v = (slot_id * 14 + static_cast<std::uint64_t>(symbol)) * 131 + 7;
    return static_cast<std::uint32_t>(v & 0x7FFFFFFFu);
}

} // namespace

DmrsPattern DmrsPattern::for_slot(const GridConfig& cfg, std::uint64_t slot_id) {
    require(cfg.n_prb >= 1, "DmrsPattern: n_prb must be >= 1");
    for (int t : cfg.dmrs_symbols)
        require(t >= 0 && t < cfg.n_symbols, "DmrsPattern: DMRS symbol index out of slot");

    DmrsPattern p;
    p.slot_id_ = slot_id;
    p.n_subcarriers_ = cfg.n_subcarriers();
    p.dmrs_flag_.assign(cfg.n_symbols, 0);
    p.dmrs_index_of_symbol_.assign(cfg.n_symbols, -1);
    int n_pilots = cfg.n_subcarriers() / 2;
    p.pilots_.resize(cfg.dmrs_symbols.size() * n_pilots);
    const float inv_sqrt2 = 1.0f / std::sqrt(2.0f);
    int row = 0;
    for (int t : cfg.dmrs_symbols) {
        p.dmrs_flag_[t] = 1;
        p.dmrs_index_of_symbol_[t] = row;
        BitVector c = gold_sequence(pilot_c_init(slot_id, t), 2 * n_pilots);
        for (int i = 0; i < n_pilots; ++i) {
            float re = (1 - 2 * c[2 * i]) * inv_sqrt2;
            float im = (1 - 2 * c[2 * i + 1]) * inv_sqrt2;
            p.pilots_[row * n_pilots + i] = {re, im};
        }
        ++row;
    }
    return p;
}

cf32 DmrsPattern::pilot(int t, int f) const {
    int row = dmrs_index_of_symbol_[t];
    return pilots_[row * (n_subcarriers_ / 2) + f / 2];
}

std::vector<std::pair<int, int>> data_re_positions(const GridConfig& cfg) {
    DmrsPattern p = DmrsPattern::for_slot(cfg, 0);
    std::vector<std::pair<int, int>> out;
    out.reserve(cfg.n_data_re());
    for (int t = 0; t < cfg.n_symbols; ++t)
        for (int f = 0; f < cfg.n_subcarriers(); ++f)
            if (!p.is_pilot(t, f)) out.emplace_back(t, f);
    return out;
}

std::pair<ResourceGrid, int> map_slot(const BitVector& coded_bits, const GridConfig& cfg,
                                      const DmrsPattern& dmrs) {
    const int n_data = cfg.n_data_re();
    require(static_cast<int>(coded_bits.size()) == kBitsPerSymbol * n_data,
            "map_slot: coded bit count does not match grid data capacity");

    std::vector<cf32> symbols = qam16_map(coded_bits);
    ResourceGrid grid(1, cfg.n_symbols, cfg.n_subcarriers());
    std::size_t s = 0;
    for (int t = 0; t < cfg.n_symbols; ++t) {
        for (int f = 0; f < cfg.n_subcarriers(); ++f) {
            if (dmrs.is_pilot(t, f))
                grid.at(0, t, f) = dmrs.pilot(t, f);
            else
                grid.at(0, t, f) = symbols[s++];
        }
    }
    return {std::move(grid), n_data};
}

std::vector<BlockRef> extract_blocks(const GridConfig& cfg) {
    require(cfg.n_prb >= kBlockPrbs, "extract_blocks: grid narrower than one block");
    std::vector<BlockRef> out;
    int n = cfg.n_blocks();
    out.reserve(n);
    for (int b = 0; b < n; ++b) {
        BlockRef r;
        r.index = b;
        r.prb_start = b * kBlockPrbs;
        r.sc_begin = r.prb_start * kSubcarriersPerPrb;
        r.sc_end = r.sc_begin + kBlockPrbs * kSubcarriersPerPrb;
        out.push_back(r);
    }
    return out;
}

std::vector<int> block_bit_indices(const GridConfig& cfg, const BlockRef& block) {
    auto positions = data_re_positions(cfg);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(kBitsPerSymbol) * 150 * kBlockPrbs);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        int f = positions[i].second;
        if (f >= block.sc_begin && f < block.sc_end) {
            for (int b = 0; b < kBitsPerSymbol; ++b)
                out.push_back(static_cast<int>(i) * kBitsPerSymbol + b);
        }
    }
    return out;
}

} // namespace nrxsim
