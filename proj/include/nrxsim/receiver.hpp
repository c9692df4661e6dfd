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

#include <functional>

#include "nrxsim/grid.hpp"
#include "nrxsim/ldpc.hpp"
#include "nrxsim/scrambler.hpp"

namespace nrxsim {

/// Everything a receiver needs to process one slot.
struct SlotContext {
    const ResourceGrid* rx = nullptr;
    const DmrsPattern* dmrs = nullptr;
    const LdpcCodec* codec = nullptr;
    const GridConfig* grid = nullptr;
    RedundancyVersion rv;
    ScramblingConfig scrambling;
    std::uint64_t slot_id = 0;
};

struct ReceiverResult {
    BitVector block;              // decoded systematic bits (payload + CRC)
    bool crc_pass = false;
    std::vector<float> llrs;      // per transmitted coded bit (scrambled domain)
    int decode_iterations = 0;
};

using Receiver = std::function<ReceiverResult(const SlotContext&)>;

/// Shared decoder tail: descramble LLR signs, undo rate matching, min-sum decode.
ReceiverResult decode_slot_llrs(std::vector<float> llrs, const SlotContext& ctx,
                                int max_iters = 20);

} // namespace nrxsim
