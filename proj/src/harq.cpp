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

#include "nrxsim/harq.hpp"

#include <deque>

#include "nrxsim/crc.hpp"
#include "nrxsim/mmse_rx.hpp"

namespace nrxsim {

namespace {

int ue_id_of(const std::string& name) {
    if (name == "ue0") return 0;
    if (name == "ue1") return 1;
    return 99;
}

struct PidState {
    bool pending = false;
    BitVector block;          // systematic bits being retransmitted
    int attempt = 0;          // attempts already transmitted
    std::uint64_t ready_slot = 0;
};

} // namespace

CaptureStore run_campaign(const CampaignConfig& cfg) {
    return run_campaign(cfg, Receiver(mmse_reference_rx));
}

CaptureStore run_campaign(const CampaignConfig& cfg, const Receiver& receiver) {
    require(cfg.n_slots > 0, "run_campaign: n_slots must be positive");
    require(cfg.n_harq_pids >= 1 && cfg.n_harq_pids <= 16, "run_campaign: harq pids in [1,16]");

    const CodecConfig codec_cfg = cfg.codec();
    const LdpcCodec codec(codec_cfg);
    const int k_bits = codec.info_length();
    const int e_bits = cfg.grid.n_coded_bits();
    const int ue_id = ue_id_of(cfg.scenario.ue.name);

    CaptureStore store;
    store.meta.grid = cfg.grid;
    store.meta.base_graph = codec_cfg.base_graph;
    store.meta.lifting_size = codec_cfg.lifting_size;
    store.meta.code_rate = cfg.code_rate;
    store.meta.mcs_id = cfg.mcs_id;
    store.meta.max_harq_attempts = cfg.max_harq_attempts;
    store.meta.scenario = cfg.scenario;
    store.meta.n_slots = cfg.n_slots;
    store.meta.config_hash = cfg.config_hash;
    store.fapi.reserve(cfg.n_slots);
    store.fh.reserve(cfg.n_slots);
    store.truth.reserve(cfg.n_slots);

    std::vector<PidState> pids(cfg.n_harq_pids);
    std::deque<int> retx_queue; // failed pids waiting for retransmission, FIFO
    int next_new_pid = 0;

    for (std::uint64_t slot = 0; slot < cfg.n_slots; ++slot) {
        // scheduling: serve an eligible retransmission first, else new data
        int pid = -1;
        bool new_data = false;
        if (!retx_queue.empty() && pids[retx_queue.front()].ready_slot <= slot) {
            pid = retx_queue.front();
            retx_queue.pop_front();
        } else {
            for (int i = 0; i < cfg.n_harq_pids; ++i) {
                int cand = (next_new_pid + i) % cfg.n_harq_pids;
                if (!pids[cand].pending) {
                    pid = cand;
                    new_data = true;
                    next_new_pid = (cand + 1) % cfg.n_harq_pids;
                    break;
                }
            }
            if (pid < 0) { // all pids busy: force the oldest retransmission
                require(!retx_queue.empty(), "run_campaign: scheduler invariant broken");
                pid = retx_queue.front();
                retx_queue.pop_front();
            }
        }

        PidState& st = pids[pid];
        if (new_data) {
            Prng prng = Prng::keyed(cfg.scenario.seed, Stream::kPayload, slot);
            BitVector payload = random_bits(prng, k_bits - kCrcBits);
            st.block = crc_attach(payload);
            st.attempt = 0;
            st.pending = true;
        }
        RedundancyVersion rv{kRvSequence[st.attempt]};
        ScramblingConfig scr = ScramblingConfig::for_transmission(cfg.ue_rnti, pid, slot);

        BitVector cw = codec.encode(st.block);
        BitVector matched = codec.rate_match(cw, rv, e_bits);
        BitVector tx_bits = scramble(matched, scr);

        DmrsPattern dmrs = DmrsPattern::for_slot(cfg.grid, slot);
        auto [tx_grid, n_data] = map_slot(tx_bits, cfg.grid, dmrs);
        (void)n_data;
        ChannelRealization ch = draw_channel(cfg.scenario, cfg.grid, slot);
        ApplyResult applied = apply_channel(tx_grid, ch, cfg.scenario.ue, cfg.scenario.seed, slot);

        SlotContext ctx;
        ctx.rx = &applied.rx;
        ctx.dmrs = &dmrs;
        ctx.codec = &codec;
        ctx.grid = &cfg.grid;
        ctx.rv = rv;
        ctx.scrambling = scr;
        ctx.slot_id = slot;

        ReceiverResult rres;
        try {
            rres = receiver(ctx);
        } catch (const std::exception&) {
            rres = ReceiverResult{}; // receiver failure counts as a CRC failure
        }

        FapiRecord fapi;
        fapi.slot_id = slot;
        fapi.harq_pid = pid;
        fapi.rv = rv;
        fapi.new_data_indicator = new_data;
        fapi.scrambling = scr;
        fapi.mcs_id = cfg.mcs_id;
        fapi.n_prb = cfg.grid.n_prb;
        fapi.crc_pass = rres.crc_pass;
        if (rres.crc_pass) fapi.decoded_block = PackedBits(rres.block);
        fapi.ue_id = ue_id;
        store.fapi.push_back(std::move(fapi));

        store.fh.push_back(FhRecord{slot, cfg.oru_id, std::move(applied.rx)});

        GroundTruthRecord gt;
        gt.slot_id = slot;
        gt.tx_block = PackedBits(st.block);
        gt.tx_coded = PackedBits(tx_bits);
        gt.signal_power = applied.signal_power;
        gt.noise_power = ch.noise_var;
        store.truth.push_back(std::move(gt));

        if (rres.crc_pass) {
            st = PidState{};
        } else {
            ++st.attempt;
            if (st.attempt >= cfg.max_harq_attempts) {
                st = PidState{}; // chain exhausted, payload dropped
            } else {
                st.ready_slot = slot + static_cast<std::uint64_t>(cfg.retransmit_delay_slots);
                retx_queue.push_back(pid);
            }
        }
    }
    return store;
}

double store_bler(const CaptureStore& store) {
    if (store.fapi.empty()) return 0.0;
    std::size_t fails = 0;
    for (const auto& r : store.fapi)
        if (!r.crc_pass) ++fails;
    return static_cast<double>(fails) / static_cast<double>(store.fapi.size());
}

} // namespace nrxsim
