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

#include "nrxsim/scrambler.hpp"

#include "nrxsim/common.hpp"

namespace nrxsim {

namespace {

constexpr int kGoldOffset = 1600;

// 31-bit LFSR state kept in a uint32, bit n of the sequence in bit n.
struct Lfsr31 {
    std::uint32_t state;
    std::uint32_t taps; // feedback: x(n+31) = parity(state & taps)

    int step() {
        int out = static_cast<int>(state & 1u);
        std::uint32_t fb = __builtin_parity(state & taps);
        state = (state >> 1) | (fb << 30);
        return out;
    }
};

} // namespace

ScramblingConfig ScramblingConfig::for_transmission(std::uint32_t ue_rnti, int harq_pid,
                                                    std::uint64_t slot_id) {
    std::uint32_t c = (ue_rnti & 0xFFFFu) << 15;
    c ^= static_cast<std::uint32_t>(harq_pid & 0xF) << 11;
    c ^= static_cast<std::uint32_t>(slot_id & 0x7FFu);
    return ScramblingConfig{c & 0x7FFFFFFFu};
}

BitVector gold_sequence(std::uint32_t c_init, std::size_t length) {
    require(c_init < (1u << 31), "gold_sequence: c_init exceeds 31 bits");
    // x1(n+31) = x1(n+3) + x1(n); x2(n+31) = x2(n+3) + x2(n+2) + x2(n+1) + x2(n)
    Lfsr31 x1{1u, (1u << 3) | 1u};
    Lfsr31 x2{c_init, (1u << 3) | (1u << 2) | (1u << 1) | 1u};
    for (int i = 0; i < kGoldOffset; ++i) {
        x1.step();
        x2.step();
    }
    BitVector out(length);
    for (std::size_t i = 0; i < length; ++i)
        out[i] = static_cast<std::uint8_t>(x1.step() ^ x2.step());
    return out;
}

BitVector scramble(const BitVector& bits, const ScramblingConfig& cfg) {
    BitVector seq = gold_sequence(cfg.c_init, bits.size());
    BitVector out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        out[i] = bits[i] ^ seq[i];
    return out;
}

void descramble_llrs(std::span<float> llrs, const ScramblingConfig& cfg) {
    BitVector seq = gold_sequence(cfg.c_init, llrs.size());
    for (std::size_t i = 0; i < llrs.size(); ++i)
        if (seq[i]) llrs[i] = -llrs[i];
}

} // namespace nrxsim
