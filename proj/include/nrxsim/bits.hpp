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

#include <cstdint>
#include <string>
#include <vector>

#include "nrxsim/rng.hpp"

namespace nrxsim {

/// One bit per element, values in {0, 1}.
using BitVector = std::vector<std::uint8_t>;

/// Bit-packed storage (MSB-first within each byte) for bulk label data.
struct PackedBits {
    std::vector<std::uint8_t> bytes;
    std::size_t n_bits = 0;

    PackedBits() = default;
    explicit PackedBits(const BitVector& bits);

    int get(std::size_t i) const {
        return (bytes[i >> 3] >> (7 - (i & 7))) & 1;
    }
    BitVector unpack() const;
    bool operator==(const PackedBits&) const = default;
};

BitVector random_bits(Prng& rng, std::size_t n);

std::string bits_to_hex(const BitVector& bits);
BitVector hex_to_bits(const std::string& hex, std::size_t n_bits);

} // namespace nrxsim
