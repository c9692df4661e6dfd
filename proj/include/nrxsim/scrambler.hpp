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

#include <span>

#include "nrxsim/bits.hpp"

namespace nrxsim {

/// Gold-sequence scrambler seed. c_init is 31 bits.
struct ScramblingConfig {
    std::uint32_t c_init = 0;

    /// Seed for a transmission, mixing the UE identity with the HARQ slot identity.
    static ScramblingConfig for_transmission(std::uint32_t ue_rnti, int harq_pid,
                                             std::uint64_t slot_id);
    bool operator==(const ScramblingConfig&) const = default;
};

/// Pseudo-random sequence c(n) from two 31-bit LFSRs
/// (x1: x^31+x^3+1 from state 1, x2: x^31+x^3+x^2+x+1 from c_init),
/// combined after a 1600-step offset.
BitVector gold_sequence(std::uint32_t c_init, std::size_t length);

/// XOR with the Gold sequence; an involution for fixed config.
BitVector scramble(const BitVector& bits, const ScramblingConfig& cfg);

/// Descrambling for soft values: flips LLR signs where c(n) = 1.
void descramble_llrs(std::span<float> llrs, const ScramblingConfig& cfg);

} // namespace nrxsim
