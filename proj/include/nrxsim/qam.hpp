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
#include <vector>

#include "nrxsim/bits.hpp"
#include "nrxsim/common.hpp"

namespace nrxsim {

inline constexpr int kBitsPerSymbol = 4;

/// Gray-mapped 16-QAM, unit average energy:
///   s = ((1-2b0)*(2-(1-2b2)) + j*(1-2b1)*(2-(1-2b3))) / sqrt(10)
cf32 qam16_point(int b0, int b1, int b2, int b3);

std::vector<cf32> qam16_map(const BitVector& bits);

/// Max-log LLRs for one received symbol given the effective channel gain.
/// Convention: llr > 0 means bit 0 is more likely.
std::array<float, 4> qam16_demap(cf32 y, cf32 h_eff, float noise_var);

} // namespace nrxsim
