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

#include "nrxsim/capture.hpp"

#include <cstring>
#include <fstream>

#include <json.hpp>

namespace nrxsim {

namespace {

using nlohmann::json;

constexpr char kFhMagic[4] = {'N', 'R', 'X', 'C'};
constexpr char kGtMagic[4] = {'N', 'R', 'X', 'G'};
constexpr std::uint16_t kFhVersion = 1;
constexpr std::uint16_t kGtVersion = 1;

class ByteWriter {
public:
    explicit ByteWriter(std::ostream& out) : out_(out) {}
    template <typename T>
    void put(T v) {
        static_assert(std::is_trivially_copyable_v<T>);
        char buf[sizeof(T)];
        std::memcpy(buf, &v, sizeof(T)); // little-endian host layout
        out_.write(buf, sizeof(T));
        crc_ = crc32_bytes(buf, sizeof(T), crc_);
    }
    void put_bytes(const void* p, std::size_t n) {
        out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
        crc_ = crc32_bytes(p, n, crc_);
    }
    std::uint32_t crc() const { return crc_; }
    void reset_crc() { crc_ = 0; }

private:
    std::ostream& out_;
    std::uint32_t crc_ = 0;
};

class ByteReader {
public:
    ByteReader(std::istream& in, const std::string& path) : in_(in), path_(path) {}
    template <typename T>
    T get() {
        T v;
        char buf[sizeof(T)];
        in_.read(buf, sizeof(T));
        if (in_.gcount() != sizeof(T))
            throw StoreError(StoreError::Kind::kTruncated, "truncated store file: " + path_);
        std::memcpy(&v, buf, sizeof(T));
        crc_ = crc32_bytes(buf, sizeof(T), crc_);
        return v;
    }
    void get_bytes(void* p, std::size_t n) {
        in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in_.gcount()) != n)
            throw StoreError(StoreError::Kind::kTruncated, "truncated store file: " + path_);
        crc_ = crc32_bytes(p, n, crc_);
    }
    std::uint32_t crc() const { return crc_; }
    void reset_crc() { crc_ = 0; }

private:
    std::istream& in_;
    std::string path_;
    std::uint32_t crc_ = 0;
};

json scenario_to_json(const ScenarioConfig& sc) {
    json j;
    j["name"] = sc.name;
    j["tap_delays_s"] = sc.tap_delays_s;
    j["tap_powers_db"] = sc.tap_powers_db;
    j["doppler_max_hz"] = sc.doppler_max_hz;
    j["snr_target_db"] = sc.snr_target_db;
    j["snr_jitter_db"] = sc.snr_jitter_db;
    j["los_probability"] = sc.los_probability;
    j["los_k_factor_db"] = sc.los_k_factor_db;
    j["ue"] = {{"name", sc.ue.name},
               {"cfo_hz", sc.ue.cfo_hz},
               {"phase_noise_std", sc.ue.phase_noise_std},
               {"tx_power_offset_db", sc.ue.tx_power_offset_db}};
    j["seed"] = sc.seed;
    return j;
}

ScenarioConfig scenario_from_json(const json& j) {
    ScenarioConfig sc;
    sc.name = j.at("name").get<std::string>();
    sc.tap_delays_s = j.at("tap_delays_s").get<std::vector<double>>();
    sc.tap_powers_db = j.at("tap_powers_db").get<std::vector<double>>();
    sc.doppler_max_hz = j.at("doppler_max_hz").get<double>();
    sc.snr_target_db = j.at("snr_target_db").get<double>();
    sc.snr_jitter_db = j.at("snr_jitter_db").get<double>();
    sc.los_probability = j.at("los_probability").get<double>();
    sc.los_k_factor_db = j.at("los_k_factor_db").get<double>();
    const auto& u = j.at("ue");
    sc.ue.name = u.at("name").get<std::string>();
    sc.ue.cfo_hz = u.at("cfo_hz").get<double>();
    sc.ue.phase_noise_std = u.at("phase_noise_std").get<double>();
    sc.ue.tx_power_offset_db = u.at("tx_power_offset_db").get<double>();
    sc.seed = j.at("seed").get<std::uint64_t>();
    return sc;
}

void write_meta(const CaptureMeta& m, const std::string& path) {
    json j;
    j["format_version"] = m.format_version;
    j["grid"] = {{"n_prb", m.grid.n_prb},
                 {"n_symbols", m.grid.n_symbols},
                 {"n_rx_antennas", m.grid.n_rx_antennas},
                 {"dmrs_symbols", m.grid.dmrs_symbols}};
    j["base_graph"] = m.base_graph == BaseGraph::kBgA ? "A" : "B";
    j["lifting_size"] = m.lifting_size;
    j["code_rate"] = m.code_rate;
    j["mcs_id"] = m.mcs_id;
    j["max_harq_attempts"] = m.max_harq_attempts;
    j["scenario"] = scenario_to_json(m.scenario);
    j["n_slots"] = m.n_slots;
    j["config_hash"] = m.config_hash;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

CaptureMeta read_meta(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StoreError(StoreError::Kind::kMissing, "missing store file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw StoreError(StoreError::Kind::kParse, "bad meta json: " + path + ": " + e.what());
    }
    CaptureMeta m;
    m.format_version = j.at("format_version").get<int>();
    if (m.format_version != 1)
        throw StoreError(StoreError::Kind::kVersionMismatch,
                         "unsupported store format version in " + path);
    const auto& g = j.at("grid");
    m.grid.n_prb = g.at("n_prb").get<int>();
    m.grid.n_symbols = g.at("n_symbols").get<int>();
    m.grid.n_rx_antennas = g.at("n_rx_antennas").get<int>();
    auto ds = g.at("dmrs_symbols").get<std::vector<int>>();
    require(ds.size() == 3, "meta: expected 3 DMRS symbols");
    std::copy(ds.begin(), ds.end(), m.grid.dmrs_symbols.begin());
    m.base_graph = j.at("base_graph").get<std::string>() == "A" ? BaseGraph::kBgA : BaseGraph::kBgB;
    m.lifting_size = j.at("lifting_size").get<int>();
    m.code_rate = j.at("code_rate").get<double>();
    m.mcs_id = j.at("mcs_id").get<int>();
    m.max_harq_attempts = j.at("max_harq_attempts").get<int>();
    m.scenario = scenario_from_json(j.at("scenario"));
    m.n_slots = j.at("n_slots").get<std::uint64_t>();
    m.config_hash = j.at("config_hash").get<std::string>();
    return m;
}

json fapi_to_json(const FapiRecord& r) {
    json j;
    j["slot_id"] = r.slot_id;
    j["harq_pid"] = r.harq_pid;
    j["rv"] = r.rv.rv;
    j["ndi"] = r.new_data_indicator ? 1 : 0;
    j["c_init"] = r.scrambling.c_init;
    j["mcs_id"] = r.mcs_id;
    j["n_prb"] = r.n_prb;
    j["crc"] = r.crc_pass ? "pass" : "fail";
    if (r.crc_pass && r.decoded_block) {
        json b;
        b["n_bits"] = r.decoded_block->n_bits;
        static const char* digits = "0123456789abcdef";
        std::string hex;
        hex.reserve(r.decoded_block->bytes.size() * 2);
        for (std::uint8_t v : r.decoded_block->bytes) {
            hex.push_back(digits[v >> 4]);
            hex.push_back(digits[v & 0xf]);
        }
        b["hex"] = hex;
        j["decoded_block"] = b;
    }
    j["ue_id"] = r.ue_id;
    return j;
}

PackedBits packed_from_hex(const std::string& hex, std::size_t n_bits) {
    PackedBits p;
    p.n_bits = n_bits;
    p.bytes.resize((n_bits + 7) / 8);
    require(hex.size() == p.bytes.size() * 2, "packed hex length mismatch");
    auto nib = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        throw ContractError("bad hex digit in store");
    };
    for (std::size_t i = 0; i < p.bytes.size(); ++i)
        p.bytes[i] = static_cast<std::uint8_t>((nib(hex[2 * i]) << 4) | nib(hex[2 * i + 1]));
    return p;
}

FapiRecord fapi_from_json(const json& j) {
    FapiRecord r;
    r.slot_id = j.at("slot_id").get<std::uint64_t>();
    r.harq_pid = j.at("harq_pid").get<int>();
    r.rv.rv = j.at("rv").get<int>();
    r.new_data_indicator = j.at("ndi").get<int>() != 0;
    r.scrambling.c_init = j.at("c_init").get<std::uint32_t>();
    r.mcs_id = j.at("mcs_id").get<int>();
    r.n_prb = j.at("n_prb").get<int>();
    r.crc_pass = j.at("crc").get<std::string>() == "pass";
    if (j.contains("decoded_block")) {
        const auto& b = j.at("decoded_block");
        r.decoded_block = packed_from_hex(b.at("hex").get<std::string>(),
                                          b.at("n_bits").get<std::size_t>());
    }
    r.ue_id = j.at("ue_id").get<int>();
    return r;
}

} // namespace

std::uint32_t crc32_bytes(const void* data, std::size_t n, std::uint32_t seed) {
    static const auto table = [] {
        std::array<std::uint32_t, 256> t{};
        for (std::uint32_t i = 0; i < 256; ++i) {
            std::uint32_t c = i;
            for (int k = 0; k < 8; ++k)
                c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : (c >> 1);
            t[i] = c;
        }
        return t;
    }();
    std::uint32_t c = seed ^ 0xFFFFFFFFu;
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i)
        c = table[(c ^ p[i]) & 0xFFu] ^ (c >> 8);
    return c ^ 0xFFFFFFFFu;
}

void write_store(const CaptureStore& store, const std::string& prefix) {
    write_meta(store.meta, prefix + ".meta.json");

    {
        std::ofstream out(prefix + ".fapi.jsonl");
        if (!out) throw std::runtime_error("cannot write " + prefix + ".fapi.jsonl");
        for (const auto& r : store.fapi)
            out << fapi_to_json(r).dump() << "\n";
    }

    {
        std::ofstream out(prefix + ".fh.bin", std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + prefix + ".fh.bin");
        ByteWriter w(out);
        w.put_bytes(kFhMagic, 4);
        w.put<std::uint16_t>(kFhVersion);
        int n_ant = 0, n_sym = 0, n_sc = 0;
        if (!store.fh.empty()) {
            n_ant = store.fh.front().rx_grid.n_antennas;
            n_sym = store.fh.front().rx_grid.n_symbols;
            n_sc = store.fh.front().rx_grid.n_subcarriers;
        }
        w.put<std::uint16_t>(static_cast<std::uint16_t>(n_ant));
        w.put<std::uint16_t>(static_cast<std::uint16_t>(n_sym));
        w.put<std::uint32_t>(static_cast<std::uint32_t>(n_sc));
        w.put<std::uint64_t>(store.fh.size());
        w.reset_crc();
        for (const auto& r : store.fh) {
            require(r.rx_grid.n_antennas == n_ant && r.rx_grid.n_symbols == n_sym &&
                        r.rx_grid.n_subcarriers == n_sc,
                    "write_store: inconsistent grid dims");
            w.put<std::uint64_t>(r.slot_id);
            w.put<std::uint16_t>(static_cast<std::uint16_t>(r.oru_id));
            w.put_bytes(r.rx_grid.samples.data(), r.rx_grid.samples.size() * sizeof(cf32));
        }
        w.put<std::uint32_t>(w.crc());
    }

    {
        std::ofstream out(prefix + ".gt.bin", std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + prefix + ".gt.bin");
        ByteWriter w(out);
        w.put_bytes(kGtMagic, 4);
        w.put<std::uint16_t>(kGtVersion);
        std::uint32_t k_bits = 0, e_bits = 0;
        if (!store.truth.empty()) {
            k_bits = static_cast<std::uint32_t>(store.truth.front().tx_block.n_bits);
            e_bits = static_cast<std::uint32_t>(store.truth.front().tx_coded.n_bits);
        }
        w.put<std::uint32_t>(k_bits);
        w.put<std::uint32_t>(e_bits);
        w.put<std::uint64_t>(store.truth.size());
        w.reset_crc();
        for (const auto& r : store.truth) {
            w.put<std::uint64_t>(r.slot_id);
            w.put<double>(r.signal_power);
            w.put<double>(r.noise_power);
            w.put_bytes(r.tx_block.bytes.data(), r.tx_block.bytes.size());
            w.put_bytes(r.tx_coded.bytes.data(), r.tx_coded.bytes.size());
        }
        w.put<std::uint32_t>(w.crc());
    }
}

CaptureStore read_store(const std::string& prefix) {
    CaptureStore store;
    store.meta = read_meta(prefix + ".meta.json");

    {
        std::ifstream in(prefix + ".fapi.jsonl");
        if (!in) throw StoreError(StoreError::Kind::kMissing,
                                  "missing store file: " + prefix + ".fapi.jsonl");
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                store.fapi.push_back(fapi_from_json(json::parse(line)));
            } catch (const json::exception& e) {
                throw StoreError(StoreError::Kind::kParse,
                                 prefix + ".fapi.jsonl:" + std::to_string(lineno) + ": " + e.what());
            }
        }
    }

    {
        const std::string path = prefix + ".fh.bin";
        std::ifstream in(path, std::ios::binary);
        if (!in) throw StoreError(StoreError::Kind::kMissing, "missing store file: " + path);
        ByteReader r(in, path);
        char magic[4];
        r.get_bytes(magic, 4);
        if (std::memcmp(magic, kFhMagic, 4) != 0)
            throw StoreError(StoreError::Kind::kBadMagic, "bad magic in " + path);
        auto ver = r.get<std::uint16_t>();
        if (ver != kFhVersion)
            throw StoreError(StoreError::Kind::kVersionMismatch,
                             "unsupported fh version " + std::to_string(ver) + " in " + path);
        int n_ant = r.get<std::uint16_t>();
        int n_sym = r.get<std::uint16_t>();
        int n_sc = static_cast<int>(r.get<std::uint32_t>());
        auto n_rec = r.get<std::uint64_t>();
        r.reset_crc();
        store.fh.resize(n_rec);
        for (auto& rec : store.fh) {
            rec.slot_id = r.get<std::uint64_t>();
            rec.oru_id = r.get<std::uint16_t>();
            rec.rx_grid = ResourceGrid(n_ant, n_sym, n_sc);
            r.get_bytes(rec.rx_grid.samples.data(), rec.rx_grid.samples.size() * sizeof(cf32));
        }
        std::uint32_t expect = r.crc();
        auto stored = r.get<std::uint32_t>();
        if (stored != expect)
            throw StoreError(StoreError::Kind::kChecksum, "checksum mismatch in " + path);
    }

    {
        const std::string path = prefix + ".gt.bin";
        std::ifstream in(path, std::ios::binary);
        if (!in) throw StoreError(StoreError::Kind::kMissing, "missing store file: " + path);
        ByteReader r(in, path);
        char magic[4];
        r.get_bytes(magic, 4);
        if (std::memcmp(magic, kGtMagic, 4) != 0)
            throw StoreError(StoreError::Kind::kBadMagic, "bad magic in " + path);
        auto ver = r.get<std::uint16_t>();
        if (ver != kGtVersion)
            throw StoreError(StoreError::Kind::kVersionMismatch,
                             "unsupported gt version " + std::to_string(ver) + " in " + path);
        auto k_bits = r.get<std::uint32_t>();
        auto e_bits = r.get<std::uint32_t>();
        auto n_rec = r.get<std::uint64_t>();
        r.reset_crc();
        store.truth.resize(n_rec);
        for (auto& rec : store.truth) {
            rec.slot_id = r.get<std::uint64_t>();
            rec.signal_power = r.get<double>();
            rec.noise_power = r.get<double>();
            rec.tx_block.n_bits = k_bits;
            rec.tx_block.bytes.resize((k_bits + 7) / 8);
            r.get_bytes(rec.tx_block.bytes.data(), rec.tx_block.bytes.size());
            rec.tx_coded.n_bits = e_bits;
            rec.tx_coded.bytes.resize((e_bits + 7) / 8);
            r.get_bytes(rec.tx_coded.bytes.data(), rec.tx_coded.bytes.size());
        }
        std::uint32_t expect = r.crc();
        auto stored = r.get<std::uint32_t>();
        if (stored != expect)
            throw StoreError(StoreError::Kind::kChecksum, "checksum mismatch in " + path);
    }

    return store;
}

} // namespace nrxsim
