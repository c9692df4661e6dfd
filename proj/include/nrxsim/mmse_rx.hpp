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

#include "nrxsim/chanest.hpp"
#include "nrxsim/receiver.hpp"

namespace nrxsim {

/// Multi-stage estimate behind the reference receiver:
/// LS at pilots, delay-domain denoising (bins below 3x the per-bin noise floor
/// are zeroed), then Wiener time smoothing under a static (zero-Doppler) prior.
ChannelEstimate mmse_channel_estimate(const ResourceGrid& rx, const DmrsPattern& dmrs,
                                      const GridConfig& cfg);

/// Reference receiver: multi-stage MMSE estimation, per-RE LMMSE combining
/// across antennas, max-log demapping, then the shared decoder tail.
ReceiverResult mmse_reference_rx(const SlotContext& ctx);

} // namespace nrxsim
