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

#include <cmath>
#include <complex>
#include <cstdint>

namespace nrxsim {

/// Purpose tags for deriving independent random streams from one seed.
/// Every stochastic draw in the pipeline is keyed by (seed, stream, indices...),
/// so results never depend on evaluation order or worker count.
enum class Stream : std::uint64_t {
    kPayload = 1,
    kChannelTaps = 2,
    kChannelLos = 3,
    kNoise = 4,
    kSnrJitter = 5,
    kScenarioDraw = 6,
    kPhaseNoise = 7,
    kBlockChoice = 8,
    kBatchCompose = 9,
    kWeightInit = 10,
    kNoiseInjection = 11,
    kTestSelect = 12,
    kDatasetSample = 13,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based deterministic generator (splitmix64 sequence).
class Prng {
public:
    explicit Prng(std::uint64_t state) : state_(state) {}

    /// Derive a generator from a seed, a stream tag and up to three indices.
    static Prng keyed(std::uint64_t seed, Stream stream, std::uint64_t a = 0,
                      std::uint64_t b = 0, std::uint64_t c = 0) {
        std::uint64_t s = splitmix64(seed ^ 0x6a09e667f3bcc908ULL);
        s = splitmix64(s ^ static_cast<std::uint64_t>(stream));
        s = splitmix64(s ^ a);
        s = splitmix64(s ^ b);
        s = splitmix64(s ^ c);
        return Prng(s);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

    int bit() { return static_cast<int>(next_u64() >> 63); }

    /// Standard normal via Box-Muller (consumes two uniforms per call).
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        // guard against log(0)
        u1 = u1 > 0.0 ? u1 : 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Circularly-symmetric complex normal with E[|z|^2] = 1.
    std::complex<double> cnormal() {
        double u1 = uniform();
        double u2 = uniform();
        u1 = u1 > 0.0 ? u1 : 0x1.0p-53;
        double r = std::sqrt(-std::log(u1));
        return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
    }

private:
    std::uint64_t state_;
};

/// FNV-1a over a byte string; used for config hashes.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace nrxsim
