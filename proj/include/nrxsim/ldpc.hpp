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

#include <span>
#include <vector>

#include "nrxsim/bits.hpp"

namespace nrxsim {

/// Quasi-cyclic protograph entry: circulant P(shift) at (row, col).
/// P(s)*v rotates v, (P(s) v)[r] = v[(r + s) mod Z]; shifts are taken mod Z.
struct BaseGraphEntry {
    int row;
    int col;
    int shift;
};

/// Two protographs with a 4-row dual-diagonal core and degree-1 extension
/// parities, so prefix reads of the circular buffer stay decodable.
enum class BaseGraph { kBgA, kBgB };

struct BaseGraphInfo {
    int kb; // systematic base columns
    int mb; // check rows
    int nb; // total base columns
    std::span<const BaseGraphEntry> entries;
};

const BaseGraphInfo& base_graph_info(BaseGraph bg);

struct CodecConfig {
    BaseGraph base_graph = BaseGraph::kBgA;
    int lifting_size = 8;

    int info_length() const { return base_graph_info(base_graph).kb * lifting_size; }
    int codeword_length() const { return base_graph_info(base_graph).nb * lifting_size; }

    /// Pick the lifting size so info_length/e_bits is closest to `rate`.
    static CodecConfig for_rate(double rate, int e_bits, BaseGraph bg = BaseGraph::kBgA);

    bool operator==(const CodecConfig&) const = default;
};

/// rv in {0,1,2,3}; buffer read offsets at {0, 1/4, 1/2, 3/4} of the codeword,
/// rounded down to a multiple of the lifting size.
struct RedundancyVersion {
    int rv = 0;

    int start_offset(const CodecConfig& cfg) const;
    bool operator==(const RedundancyVersion&) const = default;
};

/// Sequence of redundancy versions by retransmission attempt.
inline constexpr int kRvSequence[4] = {0, 2, 3, 1};

struct DecodeResult {
    BitVector block;         // systematic bits (payload with its CRC)
    bool crc_pass = false;
    BitVector hard_codeword; // length N
    int iterations = 0;
    bool syndrome_ok = false;
};

class LdpcCodec {
public:
    explicit LdpcCodec(CodecConfig cfg);

    const CodecConfig& config() const { return cfg_; }
    int info_length() const { return k_; }
    int codeword_length() const { return n_; }

    /// Systematic encoding; H * c^T = 0 over GF(2).
    BitVector encode(const BitVector& block) const;

    /// Circular-buffer read of e_bits starting at the rv offset.
    BitVector rate_match(const BitVector& codeword, RedundancyVersion rv, int e_bits) const;

    /// Scatter-add of LLRs back into codeword positions (repeats sum, unseen stay 0).
    std::vector<float> rate_recover(std::span<const float> llrs, RedundancyVersion rv) const;

    /// Layered normalized min-sum (factor 0.8), early exit on zero syndrome.
    DecodeResult decode(std::span<const float> channel_llrs, int max_iters = 20) const;

    bool syndrome_ok(const BitVector& codeword) const;

private:
    CodecConfig cfg_;
    int k_;
    int n_;
    int n_checks_;
    // flattened check adjacency over the lifted graph
    std::vector<int> check_ptr_;
    std::vector<int> edge_var_;
};

} // namespace nrxsim
