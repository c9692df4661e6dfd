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

#include "nrxsim/crc.hpp"

#include "nrxsim/common.hpp"

namespace nrxsim {

namespace {

// Shift-register CRC over the message followed by `pad` zero bits.
std::uint32_t crc24a_remainder(const BitVector& bits, std::size_t n, int pad) {
    std::uint32_t reg = 0;
    auto clock_bit = [&reg](std::uint32_t in) {
        std::uint32_t fb = ((reg >> 23) ^ in) & 1u;
        reg = (reg << 1) & 0xFFFFFFu;
        if (fb) reg ^= kCrc24aPoly & 0xFFFFFFu;
    };
    for (std::size_t i = 0; i < n; ++i) clock_bit(bits[i]);
    for (int i = 0; i < pad; ++i) clock_bit(0);
    return reg;
}

} // namespace

BitVector crc_attach(const BitVector& payload) {
    require(!payload.empty(), "crc_attach: empty payload");
    std::uint32_t rem = crc24a_remainder(payload, payload.size(), kCrcBits);
    BitVector out(payload);
    out.reserve(payload.size() + kCrcBits);
    for (int i = kCrcBits - 1; i >= 0; --i)
        out.push_back(static_cast<std::uint8_t>((rem >> i) & 1u));
    return out;
}

bool crc_check(const BitVector& block) {
    require(block.size() > static_cast<std::size_t>(kCrcBits), "crc_check: block too short");
    return crc24a_remainder(block, block.size(), 0) == 0;
}

} // namespace nrxsim
