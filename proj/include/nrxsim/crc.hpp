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

#include "nrxsim/bits.hpp"

namespace nrxsim {

inline constexpr int kCrcBits = 24;
inline constexpr std::uint32_t kCrc24aPoly = 0x1864CFB; // x^24 + ... + 1, top bit implicit

/// Appends 24 CRC parity bits (CRC-24A, zero initial state).
BitVector crc_attach(const BitVector& payload);

/// True iff the trailing 24 bits are a valid CRC over the leading bits.
bool crc_check(const BitVector& block);

} // namespace nrxsim
