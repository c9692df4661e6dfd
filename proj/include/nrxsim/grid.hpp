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

#include <array>
#include <utility>
#include <vector>

#include "nrxsim/bits.hpp"
#include "nrxsim/common.hpp"
#include "nrxsim/qam.hpp"

namespace nrxsim {

inline constexpr int kSubcarriersPerPrb = 12;
inline constexpr int kSymbolsPerSlot = 14;
inline constexpr int kBlockPrbs = 4; // training block width

struct GridConfig {
    int n_prb = 16;
    int n_symbols = kSymbolsPerSlot;
    int n_rx_antennas = 4;
    std::array<int, 3> dmrs_symbols{2, 7, 11};

    int n_subcarriers() const { return kSubcarriersPerPrb * n_prb; }
    /// Comb-2 pilots occupy half the subcarriers on each DMRS symbol.
    int n_data_re() const {
        return n_subcarriers() * n_symbols -
               static_cast<int>(dmrs_symbols.size()) * (n_subcarriers() / 2);
    }
    int n_coded_bits() const { return kBitsPerSymbol * n_data_re(); }
    int n_blocks() const { return n_prb / kBlockPrbs; }

    bool operator==(const GridConfig&) const = default;
};

/// One slot of frequency-domain samples, indexed [antenna][symbol][subcarrier].
struct ResourceGrid {
    int n_antennas = 0;
    int n_symbols = 0;
    int n_subcarriers = 0;
    std::vector<cf32> samples;

    ResourceGrid() = default;
    ResourceGrid(int ants, int syms, int scs)
        : n_antennas(ants), n_symbols(syms), n_subcarriers(scs),
          samples(static_cast<std::size_t>(ants) * syms * scs) {}

    cf32& at(int a, int t, int f) {
        return samples[(static_cast<std::size_t>(a) * n_symbols + t) * n_subcarriers + f];
    }
    cf32 at(int a, int t, int f) const {
        return samples[(static_cast<std::size_t>(a) * n_symbols + t) * n_subcarriers + f];
    }
    bool operator==(const ResourceGrid&) const = default;
};

/// Comb-2 DMRS on the configured symbols (even subcarriers), unit-modulus QPSK
/// pilots drawn from a Gold sequence seeded by the slot identity.
class DmrsPattern {
public:
    static DmrsPattern for_slot(const GridConfig& cfg, std::uint64_t slot_id);

    bool is_dmrs_symbol(int t) const { return dmrs_flag_[t]; }
    bool is_pilot(int t, int f) const { return dmrs_flag_[t] && (f % 2 == 0); }
    /// Pilot value; only valid at pilot positions.
    cf32 pilot(int t, int f) const;
    std::uint64_t slot_id() const { return slot_id_; }

private:
    std::uint64_t slot_id_ = 0;
    int n_subcarriers_ = 0;
    std::vector<std::uint8_t> dmrs_flag_;    // per symbol
    std::vector<int> dmrs_index_of_symbol_;  // symbol -> dense dmrs row, or -1
    std::vector<cf32> pilots_;               // [dmrs row][subcarrier/2]
};

/// Data-RE positions (t, f) in mapping order: symbol-major, subcarrier-minor,
/// i.e. frequency varies fastest within a symbol.
std::vector<std::pair<int, int>> data_re_positions(const GridConfig& cfg);

/// Maps coded bits (16-QAM) and pilots onto a single-antenna tx grid.
/// Returns the grid and the number of data REs filled.
std::pair<ResourceGrid, int> map_slot(const BitVector& coded_bits, const GridConfig& cfg,
                                      const DmrsPattern& dmrs);

/// 4-PRB training block: a contiguous range of subcarriers spanning all symbols.
struct BlockRef {
    int index = 0;
    int prb_start = 0;
    int sc_begin = 0;
    int sc_end = 0;
};

/// floor(n_prb / 4) blocks tiling the grid from PRB 0; leftover PRBs are not
/// covered by any block.
std::vector<BlockRef> extract_blocks(const GridConfig& cfg);

/// Indices into the slot's coded-bit string (length 4 * n_data_re) that map to
/// data REs inside the given block, in mapping order.
std::vector<int> block_bit_indices(const GridConfig& cfg, const BlockRef& block);

} // namespace nrxsim
