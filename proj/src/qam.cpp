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

#include "nrxsim/qam.hpp"

#include <cmath>
#include <limits>

namespace nrxsim {

namespace {

struct ConstellationTable {
    std::array<cf32, 16> points;
    ConstellationTable() {
        for (int label = 0; label < 16; ++label) {
            int b0 = (label >> 3) & 1, b1 = (label >> 2) & 1;
            int b2 = (label >> 1) & 1, b3 = label & 1;
            points[label] = qam16_point(b0, b1, b2, b3);
        }
    }
};

const ConstellationTable kTable;

} // namespace

cf32 qam16_point(int b0, int b1, int b2, int b3) {
    const float inv_sqrt10 = 1.0f / std::sqrt(10.0f);
    float re = static_cast<float>((1 - 2 * b0) * (2 - (1 - 2 * b2)));
    float im = static_cast<float>((1 - 2 * b1) * (2 - (1 - 2 * b3)));
    return {re * inv_sqrt10, im * inv_sqrt10};
}

std::vector<cf32> qam16_map(const BitVector& bits) {
    require(bits.size() % kBitsPerSymbol == 0, "qam16_map: bit count not divisible by 4");
    std::vector<cf32> out(bits.size() / kBitsPerSymbol);
    for (std::size_t s = 0; s < out.size(); ++s) {
        int label = (bits[4 * s] << 3) | (bits[4 * s + 1] << 2) |
                    (bits[4 * s + 2] << 1) | bits[4 * s + 3];
        out[s] = kTable.points[label];
    }
    return out;
}

std::array<float, 4> qam16_demap(cf32 y, cf32 h_eff, float noise_var) {
    require(noise_var > 0.0f, "qam16_demap: noise_var must be positive");
    std::array<float, 4> min0;
    std::array<float, 4> min1;
    min0.fill(std::numeric_limits<float>::max());
    min1.fill(std::numeric_limits<float>::max());
    for (int label = 0; label < 16; ++label) {
        cf32 d = y - h_eff * kTable.points[label];
        float dist = d.real() * d.real() + d.imag() * d.imag();
        for (int b = 0; b < 4; ++b) {
            bool is_one = (label >> (3 - b)) & 1;
            auto& slot = is_one ? min1[b] : min0[b];
            if (dist < slot) slot = dist;
        }
    }
    std::array<float, 4> llr;
    for (int b = 0; b < 4; ++b) llr[b] = (min1[b] - min0[b]) / noise_var;
    return llr;
}

} // namespace nrxsim
