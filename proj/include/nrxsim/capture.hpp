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

#include <optional>
#include <string>
#include <vector>

#include "nrxsim/channel.hpp"
#include "nrxsim/grid.hpp"
#include "nrxsim/ldpc.hpp"
#include "nrxsim/scrambler.hpp"

namespace nrxsim {

/// PHY/MAC metadata for one transmission. decoded_block (payload bits followed
/// by their CRC) is present iff crc_pass.
struct FapiRecord {
    std::uint64_t slot_id = 0;
    int harq_pid = 0;
    RedundancyVersion rv;
    bool new_data_indicator = true;
    ScramblingConfig scrambling;
    int mcs_id = 0;
    int n_prb = 0;
    bool crc_pass = false;
    std::optional<PackedBits> decoded_block;
    int ue_id = 0;

    bool operator==(const FapiRecord&) const = default;
};

/// Raw received I/Q for one slot from one radio unit.
struct FhRecord {
    std::uint64_t slot_id = 0;
    int oru_id = 0;
    ResourceGrid rx_grid;

    bool operator==(const FhRecord&) const = default;
};

/// Simulator-only oracle: transmitter truth per slot.
struct GroundTruthRecord {
    std::uint64_t slot_id = 0;
    PackedBits tx_block;   // systematic bits (payload + CRC)
    PackedBits tx_coded;   // transmitted coded bits after scrambling (length E)
    double signal_power = 0.0; // realized Es per RE, including channel gain
    double noise_power = 0.0;  // N0

    bool operator==(const GroundTruthRecord&) const = default;
};

struct CaptureMeta {
    int format_version = 1;
    GridConfig grid;
    BaseGraph base_graph = BaseGraph::kBgA;
    int lifting_size = 8;
    double code_rate = 0.5;
    int mcs_id = 0;
    int max_harq_attempts = 4;
    ScenarioConfig scenario;
    std::uint64_t n_slots = 0;
    std::string config_hash;

    CodecConfig codec() const { return CodecConfig{base_graph, lifting_size}; }
};

struct CaptureStore {
    CaptureMeta meta;
    std::vector<FapiRecord> fapi;
    std::vector<FhRecord> fh;
    std::vector<GroundTruthRecord> truth;
};

/// Store I/O errors, distinguishable by kind.
class StoreError : public std::runtime_error {
public:
    enum class Kind { kBadMagic, kVersionMismatch, kTruncated, kChecksum, kParse, kMissing };
    StoreError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Writes `<prefix>.meta.json`, `<prefix>.fapi.jsonl`, `<prefix>.fh.bin`,
/// `<prefix>.gt.bin`. Round trips bit-exactly.
void write_store(const CaptureStore& store, const std::string& prefix);
CaptureStore read_store(const std::string& prefix);

std::uint32_t crc32_bytes(const void* data, std::size_t n, std::uint32_t seed = 0);

} // namespace nrxsim
