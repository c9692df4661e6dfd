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

#include "nrxsim/ldpc.hpp"

#include <algorithm>
#include <cmath>

#include "nrxsim/common.hpp"
#include "nrxsim/crc.hpp"

namespace nrxsim {

namespace {

constexpr float kMinSumScale = 0.8f;

// Core rows 0..3 carry the dual-diagonal parity structure:
//   col kb   : rows {0,1,3} with shifts {1,0,1}
//   col kb+1 : rows {0,1}, kb+2 : rows {1,2}, kb+3 : rows {2,3}, all shift 0.
// Extension rows i >= 4 add one core-parity tap and an identity at col kb+i.
constexpr BaseGraphEntry kBgAEntries[] = {
    {0, 1, 1}, {0, 3, 1}, {0, 4, 0}, {0, 6, 6}, {0, 10, 1}, {0, 11, 0},
    {1, 0, 2}, {1, 5, 0}, {1, 7, 4}, {1, 9, 0}, {1, 10, 0}, {1, 11, 0}, {1, 12, 0},
    {2, 2, 5}, {2, 6, 7}, {2, 8, 3}, {2, 9, 3}, {2, 12, 0}, {2, 13, 0},
    {3, 0, 6}, {3, 1, 2}, {3, 5, 5}, {3, 8, 0}, {3, 10, 1}, {3, 13, 0},
    {4, 2, 7}, {4, 3, 3}, {4, 4, 6}, {4, 7, 3}, {4, 10, 6}, {4, 14, 0},
    {5, 0, 5}, {5, 5, 6}, {5, 6, 5}, {5, 11, 1}, {5, 15, 0},
    {6, 4, 7}, {6, 8, 5}, {6, 9, 2}, {6, 12, 4}, {6, 16, 0},
    {7, 1, 1}, {7, 2, 2}, {7, 7, 5}, {7, 13, 1}, {7, 17, 0},
    {8, 3, 1}, {8, 4, 6}, {8, 6, 3}, {8, 10, 0}, {8, 18, 0},
    {9, 1, 7}, {9, 2, 7}, {9, 7, 1}, {9, 11, 7}, {9, 19, 0},
    {10, 3, 0}, {10, 8, 0}, {10, 9, 3}, {10, 12, 6}, {10, 20, 0},
    {11, 0, 6}, {11, 1, 7}, {11, 5, 0}, {11, 13, 1}, {11, 21, 0},
    {12, 2, 2}, {12, 5, 2}, {12, 8, 1}, {12, 10, 5}, {12, 22, 0},
    {13, 3, 4}, {13, 4, 0}, {13, 6, 0}, {13, 11, 6}, {13, 23, 0},
    {14, 0, 0}, {14, 7, 6}, {14, 9, 0}, {14, 12, 7}, {14, 24, 0},
};

constexpr BaseGraphEntry kBgBEntries[] = {
    {0, 2, 0}, {0, 4, 5}, {0, 9, 7}, {0, 10, 7}, {0, 11, 1}, {0, 12, 0},
    {1, 2, 6}, {1, 4, 6}, {1, 5, 4}, {1, 7, 4}, {1, 11, 0}, {1, 12, 0}, {1, 13, 0},
    {2, 1, 0}, {2, 6, 2}, {2, 8, 7}, {2, 10, 6}, {2, 13, 0}, {2, 14, 0},
    {3, 0, 2}, {3, 1, 5}, {3, 3, 3}, {3, 6, 3}, {3, 11, 1}, {3, 14, 0},
    {4, 0, 7}, {4, 5, 7}, {4, 7, 0}, {4, 9, 1}, {4, 11, 0}, {4, 15, 0},
    {5, 1, 0}, {5, 3, 4}, {5, 5, 5}, {5, 8, 0}, {5, 12, 0}, {5, 16, 0},
    {6, 2, 7}, {6, 4, 6}, {6, 6, 4}, {6, 7, 7}, {6, 13, 5}, {6, 17, 0},
    {7, 0, 0}, {7, 3, 0}, {7, 9, 3}, {7, 10, 2}, {7, 14, 3}, {7, 18, 0},
    {8, 1, 0}, {8, 5, 0}, {8, 6, 7}, {8, 8, 5}, {8, 11, 6}, {8, 19, 0},
    {9, 2, 6}, {9, 4, 2}, {9, 7, 5}, {9, 9, 7}, {9, 12, 7}, {9, 20, 0},
    {10, 0, 5}, {10, 3, 3}, {10, 10, 4}, {10, 13, 3}, {10, 21, 0},
    {11, 4, 6}, {11, 8, 3}, {11, 10, 5}, {11, 14, 2}, {11, 22, 0},
    {12, 5, 1}, {12, 8, 7}, {12, 9, 5}, {12, 11, 6}, {12, 23, 0},
    {13, 1, 2}, {13, 2, 3}, {13, 3, 7}, {13, 12, 1}, {13, 24, 0},
    {14, 0, 3}, {14, 6, 7}, {14, 7, 1}, {14, 13, 3}, {14, 25, 0},
};

const BaseGraphInfo kBgA{10, 15, 25, kBgAEntries};
const BaseGraphInfo kBgB{11, 15, 26, kBgBEntries};

// out ^= P(shift) * block
void xor_rotated(std::span<std::uint8_t> out, std::span<const std::uint8_t> block, int shift, int z) {
    for (int r = 0; r < z; ++r) out[r] ^= block[(r + shift) % z];
}

} // namespace

const BaseGraphInfo& base_graph_info(BaseGraph bg) {
    return bg == BaseGraph::kBgA ? kBgA : kBgB;
}

CodecConfig CodecConfig::for_rate(double rate, int e_bits, BaseGraph bg) {
    require(rate > 0.0 && rate < 1.0, "CodecConfig::for_rate: rate out of (0,1)");
    require(e_bits > 0, "CodecConfig::for_rate: e_bits must be positive");
    const auto& info = base_graph_info(bg);
    int z = static_cast<int>(std::lround(rate * e_bits / info.kb));
    z = std::max(z, 4); // K must exceed the 24 CRC bits
    return CodecConfig{bg, z};
}

int RedundancyVersion::start_offset(const CodecConfig& cfg) const {
    require(rv >= 0 && rv < 4, "RedundancyVersion: rv out of {0,1,2,3}");
    int n = cfg.codeword_length();
    int z = cfg.lifting_size;
    int raw = static_cast<int>((static_cast<std::int64_t>(rv) * n) / 4);
    return (raw / z) * z;
}

LdpcCodec::LdpcCodec(CodecConfig cfg) : cfg_(cfg) {
    require(cfg.lifting_size >= 2, "LdpcCodec: lifting size too small");
    const auto& info = base_graph_info(cfg.base_graph);
    const int z = cfg.lifting_size;
    k_ = info.kb * z;
    n_ = info.nb * z;
    n_checks_ = info.mb * z;

    // expand adjacency, grouped per lifted check
    std::vector<std::vector<int>> rows(info.mb);
    for (const auto& e : info.entries) rows[e.row].push_back(&e - info.entries.data());

    check_ptr_.assign(n_checks_ + 1, 0);
    for (int i = 0; i < info.mb; ++i) {
        int deg = static_cast<int>(rows[i].size());
        for (int r = 0; r < z; ++r) check_ptr_[i * z + r + 1] = deg;
    }
    for (int c = 0; c < n_checks_; ++c) check_ptr_[c + 1] += check_ptr_[c];
    edge_var_.resize(check_ptr_[n_checks_]);
    for (int i = 0; i < info.mb; ++i) {
        for (int r = 0; r < z; ++r) {
            int c = i * z + r;
            int at = check_ptr_[c];
            for (int ei : rows[i]) {
                const auto& e = info.entries[ei];
                edge_var_[at++] = e.col * z + (r + e.shift % z) % z;
            }
        }
    }
}

BitVector LdpcCodec::encode(const BitVector& block) const {
    require(static_cast<int>(block.size()) == k_, "ldpc_encode: block length != K");
    const auto& info = base_graph_info(cfg_.base_graph);
    const int z = cfg_.lifting_size;
    const int kb = info.kb;

    // A_i = info part of base row i applied to the systematic bits
    std::vector<BitVector> a(info.mb, BitVector(z, 0));
    std::vector<std::vector<std::pair<int, int>>> par_taps(info.mb); // (parity block, shift)
    for (const auto& e : info.entries) {
        if (e.col < kb) {
            xor_rotated(a[e.row], std::span(block).subspan(e.col * z, z), e.shift % z, z);
        } else if (e.col < kb + 4 && e.row >= 4) {
            par_taps[e.row].push_back({e.col - kb, e.shift % z});
        }
    }

    // dual-diagonal core: summing rows 0..3 leaves P(0) p0 = sum A_i
    std::vector<BitVector> p(info.mb, BitVector(z, 0));
    for (int r = 0; r < z; ++r)
        p[0][r] = a[0][r] ^ a[1][r] ^ a[2][r] ^ a[3][r];
    BitVector p0s(z, 0);
    xor_rotated(p0s, p[0], 1 % z, z); // P(1) p0
    for (int r = 0; r < z; ++r) {
        p[1][r] = a[0][r] ^ p0s[r];
        p[2][r] = a[1][r] ^ p[0][r] ^ p[1][r];
        p[3][r] = a[3][r] ^ p0s[r];
    }
    for (int i = 4; i < info.mb; ++i) {
        p[i] = a[i];
        for (auto [pj, s] : par_taps[i])
            xor_rotated(p[i], p[pj], s, z);
    }

    BitVector cw(block);
    cw.resize(n_);
    for (int i = 0; i < info.mb; ++i)
        std::copy(p[i].begin(), p[i].end(), cw.begin() + (kb + i) * z);
    return cw;
}

BitVector LdpcCodec::rate_match(const BitVector& codeword, RedundancyVersion rv, int e_bits) const {
    require(static_cast<int>(codeword.size()) == n_, "rate_match: codeword length != N");
    require(e_bits > 0, "rate_match: E must be positive");
    int off = rv.start_offset(cfg_);
    BitVector out(e_bits);
    for (int i = 0; i < e_bits; ++i) out[i] = codeword[(off + i) % n_];
    return out;
}

std::vector<float> LdpcCodec::rate_recover(std::span<const float> llrs, RedundancyVersion rv) const {
    int off = rv.start_offset(cfg_);
    std::vector<float> out(n_, 0.0f);
    for (std::size_t i = 0; i < llrs.size(); ++i)
        out[(off + i) % n_] += llrs[i];
    return out;
}

bool LdpcCodec::syndrome_ok(const BitVector& codeword) const {
    for (int c = 0; c < n_checks_; ++c) {
        int s = 0;
        for (int e = check_ptr_[c]; e < check_ptr_[c + 1]; ++e)
            s ^= codeword[edge_var_[e]];
        if (s) return false;
    }
    return true;
}

DecodeResult LdpcCodec::decode(std::span<const float> channel_llrs, int max_iters) const {
    require(static_cast<int>(channel_llrs.size()) == n_, "ldpc_decode: LLR length != N");
    bool any_info = false;
    for (float v : channel_llrs) {
        require(std::isfinite(v), "ldpc_decode: non-finite LLR");
        if (v != 0.0f) any_info = true;
    }

    DecodeResult res;
    if (!any_info) return res; // zero-information input

    std::vector<float> total(channel_llrs.begin(), channel_llrs.end());
    std::vector<float> msg(edge_var_.size(), 0.0f);
    std::vector<float> v2c(32);

    auto extract = [&](DecodeResult& r) {
        r.hard_codeword.resize(n_);
        for (int v = 0; v < n_; ++v)
            r.hard_codeword[v] = total[v] < 0.0f ? 1 : 0;
        r.block.assign(r.hard_codeword.begin(), r.hard_codeword.begin() + k_);
        r.syndrome_ok = syndrome_ok(r.hard_codeword);
        r.crc_pass = r.syndrome_ok && crc_check(r.block);
    };

    for (int it = 1; it <= max_iters; ++it) {
        // layered sweep: totals updated check by check
        for (int c = 0; c < n_checks_; ++c) {
            int lo = check_ptr_[c], hi = check_ptr_[c + 1];
            int deg = hi - lo;
            if (static_cast<int>(v2c.size()) < deg) v2c.resize(deg);
            float min1 = std::numeric_limits<float>::max();
            float min2 = std::numeric_limits<float>::max();
            int min_pos = -1;
            unsigned sign_all = 0;
            for (int e = lo; e < hi; ++e) {
                float m = total[edge_var_[e]] - msg[e];
                v2c[e - lo] = m;
                unsigned s = m < 0.0f;
                sign_all ^= s;
                float mag = std::fabs(m);
                if (mag < min1) {
                    min2 = min1;
                    min1 = mag;
                    min_pos = e - lo;
                } else if (mag < min2) {
                    min2 = mag;
                }
            }
            for (int e = lo; e < hi; ++e) {
                float in = v2c[e - lo];
                unsigned s = sign_all ^ (in < 0.0f);
                float mag = (e - lo == min_pos) ? min2 : min1;
                float out = kMinSumScale * (s ? -mag : mag);
                total[edge_var_[e]] += out - msg[e];
                msg[e] = out;
            }
        }
        res.iterations = it;
        extract(res);
        if (res.syndrome_ok) return res;
    }
    return res;
}

} // namespace nrxsim
