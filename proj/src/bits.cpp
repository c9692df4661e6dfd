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

#include "nrxsim/bits.hpp"

#include "nrxsim/common.hpp"

namespace nrxsim {

PackedBits::PackedBits(const BitVector& bits) : n_bits(bits.size()) {
    bytes.assign((n_bits + 7) / 8, 0);
    for (std::size_t i = 0; i < n_bits; ++i) {
        if (bits[i]) bytes[i >> 3] |= static_cast<std::uint8_t>(1u << (7 - (i & 7)));
    }
}

BitVector PackedBits::unpack() const {
    BitVector out(n_bits);
    for (std::size_t i = 0; i < n_bits; ++i) out[i] = static_cast<std::uint8_t>(get(i));
    return out;
}

BitVector random_bits(Prng& rng, std::size_t n) {
    BitVector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(rng.bit());
    return out;
}

std::string bits_to_hex(const BitVector& bits) {
    static const char* digits = "0123456789abcdef";
    PackedBits p(bits);
    std::string out;
    out.reserve(p.bytes.size() * 2);
    for (std::uint8_t b : p.bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

BitVector hex_to_bits(const std::string& hex, std::size_t n_bits) {
    require(hex.size() * 4 >= n_bits, "hex_to_bits: string too short");
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw ContractError("hex_to_bits: invalid hex digit");
    };
    BitVector out(n_bits);
    for (std::size_t i = 0; i < n_bits; ++i) {
        int v = nib(hex[i / 4]);
        out[i] = static_cast<std::uint8_t>((v >> (3 - (i & 3))) & 1);
    }
    return out;
}

} // namespace nrxsim
