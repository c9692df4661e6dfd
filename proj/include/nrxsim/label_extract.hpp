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

#include <string>
#include <vector>

#include "nrxsim/capture.hpp"

namespace nrxsim {

/// One slot with recovered ground-truth encoded bit labels.
struct LabeledSlot {
    enum class Source { kDirect, kHarqRecovered };

    std::uint64_t slot_id = 0;
    std::size_t record_index = 0; // into store.fapi / store.fh
    PackedBits block;             // systematic bits (payload + CRC)
    PackedBits coded_bit_labels;  // transmitted coded bits, scrambled domain, length E
    Source source = Source::kDirect;
    std::vector<std::uint64_t> harq_chain; // slot ids from this slot to the recovery
};

struct DropRecord {
    std::uint64_t slot_id = 0;
    std::string reason;
};

struct ExtractResult {
    std::vector<LabeledSlot> labeled; // sorted by slot_id
    std::vector<DropRecord> dropped;
};

inline constexpr const char* kDropNoRetransmission = "no successful retransmission";
inline constexpr const char* kDropChainPreempted = "chain preempted";
inline constexpr const char* kDropMissingPayload = "pass record missing payload";
inline constexpr const char* kDropCrcInvalid = "stored payload fails CRC";

/// Recovers labels: pass slots directly from the decoded payload; failed slots
/// by forward-scanning for the next pass record with the same HARQ process id
/// and new-data indicator unset, then re-encoding that payload with the failed
/// slot's redundancy version and scrambling.
ExtractResult extract_labels(const CaptureStore& store);

/// Slot selection plus 4-PRB block expansion; no grid data is touched, so this
/// also runs at paper scale for bookkeeping.
struct DatasetPlan {
    struct Slot {
        std::size_t labeled_index = 0;
        std::uint64_t slot_id = 0;
        LabeledSlot::Source source = LabeledSlot::Source::kDirect;
    };
    struct Sample {
        std::uint32_t slot = 0;  // index into slots
        std::uint32_t block = 0; // 4-PRB block index
    };

    GridConfig grid;
    std::vector<Slot> slots;
    std::vector<Sample> samples;
    std::size_t n_fail_slots = 0;

    std::size_t n_samples() const { return samples.size(); }
};

DatasetPlan build_dataset(const std::vector<LabeledSlot>& labeled, const GridConfig& grid,
                          std::size_t n_slots, double target_fail_fraction,
                          std::uint64_t seed);

/// Text manifest describing an extraction + dataset plan.
std::string dataset_manifest(const ExtractResult& extract, const DatasetPlan& plan,
                             const std::string& store_prefix, const std::string& config_hash);

} // namespace nrxsim
