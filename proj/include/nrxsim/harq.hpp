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

#include "nrxsim/capture.hpp"
#include "nrxsim/receiver.hpp"

namespace nrxsim {

struct CampaignConfig {
    ScenarioConfig scenario;
    GridConfig grid;
    double code_rate = 0.5;
    int mcs_id = 0;
    std::uint64_t n_slots = 1000;
    std::uint32_t ue_rnti = 0x4601;
    int oru_id = 0;
    int n_harq_pids = 16;
    int max_harq_attempts = 4;       // rv sequence [0,2,3,1]
    int retransmit_delay_slots = 4;  // processing gap before a retransmission
    std::string config_hash;

    CodecConfig codec() const {
        GridConfig g = grid;
        return CodecConfig::for_rate(code_rate, g.n_coded_bits());
    }
};

/// Runs the closed-loop uplink: HARQ scheduling, encode, channel, reference
/// receiver, capture records. Strictly sequential over slots (slot t+1 depends
/// on slot t's CRC), deterministic given the config.
CaptureStore run_campaign(const CampaignConfig& cfg, const Receiver& receiver);

/// Campaign with the MMSE reference receiver.
CaptureStore run_campaign(const CampaignConfig& cfg);

/// Fraction of CRC-failed records in a store.
double store_bler(const CaptureStore& store);

} // namespace nrxsim
