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

#include "nrxsim/label_extract.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nrxsim/crc.hpp"

namespace nrxsim {

namespace {

PackedBits reencode(const LdpcCodec& codec, const BitVector& block, RedundancyVersion rv,
                    const ScramblingConfig& scr, int e_bits) {
    BitVector cw = codec.encode(block);
    BitVector matched = codec.rate_match(cw, rv, e_bits);
    return PackedBits(scramble(matched, scr));
}

} // namespace

ExtractResult extract_labels(const CaptureStore& store) {
    ExtractResult out;
    const LdpcCodec codec(store.meta.codec());
    const int e_bits = store.meta.grid.n_coded_bits();

    // per-pid record index lists, in store order
    std::map<int, std::vector<std::size_t>> by_pid;
    for (std::size_t i = 0; i < store.fapi.size(); ++i)
        by_pid[store.fapi[i].harq_pid].push_back(i);
    std::map<std::size_t, std::size_t> pos_in_pid;
    for (auto& [pid, list] : by_pid)
        for (std::size_t k = 0; k < list.size(); ++k) pos_in_pid[list[k]] = k;

    for (std::size_t i = 0; i < store.fapi.size(); ++i) {
        const FapiRecord& rec = store.fapi[i];
        if (rec.crc_pass) {
            if (!rec.decoded_block) {
                out.dropped.push_back({rec.slot_id, kDropMissingPayload});
                continue;
            }
            BitVector block = rec.decoded_block->unpack();
            if (!crc_check(block)) {
                out.dropped.push_back({rec.slot_id, kDropCrcInvalid});
                continue;
            }
            LabeledSlot ls;
            ls.slot_id = rec.slot_id;
            ls.record_index = i;
            ls.block = *rec.decoded_block;
            ls.coded_bit_labels = reencode(codec, block, rec.rv, rec.scrambling, e_bits);
            ls.source = LabeledSlot::Source::kDirect;
            ls.harq_chain = {rec.slot_id};
            out.labeled.push_back(std::move(ls));
            continue;
        }

        // failed slot: forward scan over this pid's records
        const auto& list = by_pid[rec.harq_pid];
        std::size_t start = pos_in_pid[i] + 1;
        std::vector<std::uint64_t> chain{rec.slot_id};
        bool resolved = false;
        for (std::size_t k = start; k < list.size() && !resolved; ++k) {
            const FapiRecord& cand = store.fapi[list[k]];
            if (cand.new_data_indicator) {
                // pid reused before any success; the original payload is gone
                const char* reason = chain.size() >= 4 ? kDropNoRetransmission
                                                       : kDropChainPreempted;
                out.dropped.push_back({rec.slot_id, reason});
                resolved = true;
            } else if (cand.crc_pass) {
                if (!cand.decoded_block) {
                    out.dropped.push_back({rec.slot_id, kDropMissingPayload});
                    resolved = true;
                    break;
                }
                BitVector block = cand.decoded_block->unpack();
                if (!crc_check(block)) {
                    out.dropped.push_back({rec.slot_id, kDropCrcInvalid});
                    resolved = true;
                    break;
                }
                chain.push_back(cand.slot_id);
                LabeledSlot ls;
                ls.slot_id = rec.slot_id;
                ls.record_index = i;
                ls.block = *cand.decoded_block;
                // labels for the *failed* transmission: its own rv + scrambling
                ls.coded_bit_labels = reencode(codec, block, rec.rv, rec.scrambling, e_bits);
                ls.source = LabeledSlot::Source::kHarqRecovered;
                ls.harq_chain = std::move(chain);
                out.labeled.push_back(std::move(ls));
                resolved = true;
            } else {
                chain.push_back(cand.slot_id); // multi-hop chain, keep scanning
            }
        }
        if (!resolved)
            out.dropped.push_back({rec.slot_id, kDropNoRetransmission});
    }

    std::sort(out.labeled.begin(), out.labeled.end(),
              [](const LabeledSlot& a, const LabeledSlot& b) { return a.slot_id < b.slot_id; });
    std::sort(out.dropped.begin(), out.dropped.end(),
              [](const DropRecord& a, const DropRecord& b) { return a.slot_id < b.slot_id; });
    return out;
}

DatasetPlan build_dataset(const std::vector<LabeledSlot>& labeled, const GridConfig& grid,
                          std::size_t n_slots, double target_fail_fraction,
                          std::uint64_t seed) {
    require(target_fail_fraction >= 0.0 && target_fail_fraction <= 1.0,
            "build_dataset: fail fraction out of [0,1]");
    require(grid.n_prb >= kBlockPrbs, "build_dataset: grid narrower than one block");

    std::vector<std::size_t> pass_idx;
    std::vector<std::size_t> fail_idx;
    for (std::size_t i = 0; i < labeled.size(); ++i) {
        if (labeled[i].source == LabeledSlot::Source::kDirect)
            pass_idx.push_back(i);
        else
            fail_idx.push_back(i);
    }
    std::size_t want_fail = static_cast<std::size_t>(
        std::llround(target_fail_fraction * static_cast<double>(n_slots)));
    std::size_t want_pass = n_slots - want_fail;
    require(pass_idx.size() >= want_pass, "build_dataset: not enough pass slots");
    require(fail_idx.size() >= want_fail, "build_dataset: not enough recovered fail slots");

    auto shuffled_prefix = [&](std::vector<std::size_t>& v, std::size_t take, Stream stream) {
        Prng rng = Prng::keyed(seed, stream, v.size(), take);
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[rng.uniform_index(i)]);
        v.resize(take);
    };
    shuffled_prefix(pass_idx, want_pass, Stream::kDatasetSample);
    shuffled_prefix(fail_idx, want_fail, Stream::kBlockChoice);

    DatasetPlan plan;
    plan.grid = grid;
    plan.n_fail_slots = want_fail;
    std::vector<std::size_t> chosen;
    chosen.reserve(n_slots);
    chosen.insert(chosen.end(), pass_idx.begin(), pass_idx.end());
    chosen.insert(chosen.end(), fail_idx.begin(), fail_idx.end());
    std::sort(chosen.begin(), chosen.end());

    plan.slots.reserve(chosen.size());
    for (std::size_t idx : chosen)
        plan.slots.push_back({idx, labeled[idx].slot_id, labeled[idx].source});

    const int n_blocks = grid.n_blocks();
    plan.samples.reserve(plan.slots.size() * static_cast<std::size_t>(n_blocks));
    for (std::uint32_t s = 0; s < plan.slots.size(); ++s)
        for (int b = 0; b < n_blocks; ++b)
            plan.samples.push_back({s, static_cast<std::uint32_t>(b)});
    return plan;
}

std::string dataset_manifest(const ExtractResult& extract, const DatasetPlan& plan,
                             const std::string& store_prefix, const std::string& config_hash) {
    std::size_t direct = 0, recovered = 0;
    for (const auto& l : extract.labeled)
        (l.source == LabeledSlot::Source::kDirect ? direct : recovered)++;
    std::map<std::string, std::size_t> reasons;
    for (const auto& d : extract.dropped) reasons[d.reason]++;

    std::ostringstream ss;
    ss << "store = " << store_prefix << "\n";
    ss << "config_hash = " << config_hash << "\n";
    ss << "labeled_total = " << extract.labeled.size() << "\n";
    ss << "labeled_direct = " << direct << "\n";
    ss << "labeled_harq_recovered = " << recovered << "\n";
    ss << "dropped_total = " << extract.dropped.size() << "\n";
    for (const auto& [reason, count] : reasons)
        ss << "dropped[" << reason << "] = " << count << "\n";
    ss << "dataset_slots = " << plan.slots.size() << "\n";
    ss << "dataset_fail_slots = " << plan.n_fail_slots << "\n";
    ss << "blocks_per_slot = " << plan.grid.n_blocks() << "\n";
    ss << "dataset_samples = " << plan.n_samples() << "\n";
    return ss.str();
}

} // namespace nrxsim
