/*
Copyright 2026 The ftdo Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "ftdo/oracle_file.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "ftdo/tiebreak.hpp"

namespace ftdo {

namespace {

class Writer {
public:
    void bytes(const char* p, std::size_t k) { out_.append(p, k); }
    void u8(std::uint8_t x) { out_.push_back(static_cast<char>(x)); }
    void u32(std::uint32_t x) {
        for (int i = 0; i < 4; ++i) {
            u8(static_cast<std::uint8_t>(x >> (8 * i)));
        }
    }
    void i32(std::int32_t x) { u32(static_cast<std::uint32_t>(x)); }
    void u64(std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            u8(static_cast<std::uint8_t>(x >> (8 * i)));
        }
    }
    void length(const CompositeLength& len) {
        u8(len.is_unreachable() ? 1 : 0);
        u64(len.is_unreachable() ? 0 : len.true_len);
        u64(len.is_unreachable() ? 0 : len.tie_key);
    }
    std::string take() { return std::move(out_); }

private:
    std::string out_;
};

class Reader {
public:
    explicit Reader(std::string_view in) : in_(in) {}

    void need(std::size_t k) const {
        if (in_.size() - pos_ < k) {
            throw OracleFileError("truncated oracle file at byte " + std::to_string(pos_));
        }
    }
    std::string_view bytes(std::size_t k) {
        need(k);
        auto s = in_.substr(pos_, k);
        pos_ += k;
        return s;
    }
    std::uint8_t u8() {
        need(1);
        return static_cast<std::uint8_t>(in_[pos_++]);
    }
    std::uint32_t u32() {
        std::uint32_t x = 0;
        for (int i = 0; i < 4; ++i) {
            x |= static_cast<std::uint32_t>(u8()) << (8 * i);
        }
        return x;
    }
    std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
    std::uint64_t u64() {
        std::uint64_t x = 0;
        for (int i = 0; i < 8; ++i) {
            x |= static_cast<std::uint64_t>(u8()) << (8 * i);
        }
        return x;
    }
    CompositeLength length() {
        std::uint8_t flag = u8();
        CompositeLength len{u64(), u64()};
        if (flag > 1) {
            throw OracleFileError("bad reachability flag");
        }
        return flag ? CompositeLength::unreachable() : len;
    }
    bool at_end() const { return pos_ == in_.size(); }

private:
    std::string_view in_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_oracle(const Oracle& oracle) {
    const Graph& g = oracle.graph;
    const std::size_t n = g.num_vertices();
    const std::size_t d = oracle.budget();
    Writer w;
    w.bytes(kOracleMagic, sizeof kOracleMagic);
    w.u32(kOracleVersion);
    w.u8(sizeof(Vertex));
    w.u8(sizeof(EdgeId));
    w.u8(sizeof(std::uint64_t));
    w.u8(0);
    w.u64(oracle.digest());
    w.u32(static_cast<std::uint32_t>(n));
    w.u32(static_cast<std::uint32_t>(g.num_edges()));
    w.u32(static_cast<std::uint32_t>(d));
    w.u64(oracle.tiebreak.seed);
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edges()[i];
        w.u32(static_cast<std::uint32_t>(e.a));
        w.u32(static_cast<std::uint32_t>(e.b));
        w.u64(e.weight);
        w.u64(oracle.tiebreak.keys[i]);
    }
    for (const CompositeLength& len : oracle.index.dist_table()) {
        w.length(len);
    }
    for (std::size_t i = 0; i < n * n; ++i) {
        w.i32(oracle.index.parent_table()[i]);
        w.i32(oracle.index.parent_edge_table()[i]);
        w.u32(oracle.index.depth_table()[i]);
        w.u32(oracle.index.tin_table()[i]);
        w.u32(oracle.index.tout_table()[i]);
    }
    const std::size_t entries = oracle.tables.entry_count();
    w.u64(entries);
    for (std::size_t s = 0; s < entries; ++s) {
        TableEntry entry = oracle.tables.entry_at(s);
        w.u32(static_cast<std::uint32_t>(entry.d_star.size()));
        for (std::size_t k = 0; k < d; ++k) {
            w.i32(k < entry.d_star.size() ? entry.d_star[k] : kNoEdge);
        }
        w.length(entry.l_star);
    }
    return w.take();
}

Oracle deserialize_oracle(std::string_view bytes, const Graph* expected) {
    Reader r(bytes);
    if (r.bytes(sizeof kOracleMagic) != std::string_view(kOracleMagic, sizeof kOracleMagic)) {
        throw OracleFileError("not an oracle file (bad magic)");
    }
    if (std::uint32_t version = r.u32(); version != kOracleVersion) {
        throw OracleFileError("unsupported oracle file version " + std::to_string(version));
    }
    if (r.u8() != sizeof(Vertex) || r.u8() != sizeof(EdgeId) || r.u8() != sizeof(std::uint64_t) || r.u8() != 0) {
        throw OracleFileError("unsupported integer widths");
    }
    const std::uint64_t digest = r.u64();
    const std::size_t n = r.u32();
    const std::size_t m = r.u32();
    const std::size_t d = r.u32();
    if (d < 1 || d > 0xFFFF) {
        throw OracleFileError("failure budget " + std::to_string(d) + " out of range");
    }
    Oracle oracle;
    oracle.tiebreak.seed = r.u64();
    r.need(m * 24);
    std::vector<Edge> edges(m);
    oracle.tiebreak.keys.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        edges[i].a = static_cast<Vertex>(r.u32());
        edges[i].b = static_cast<Vertex>(r.u32());
        edges[i].weight = r.u64();
        oracle.tiebreak.keys[i] = r.u64();
    }
    oracle.graph = Graph(n, std::move(edges));
    if (auto diag = validate(oracle.graph)) {
        throw OracleFileError("stored graph is invalid: " + diag->message);
    }
    if (oracle.digest() != digest) {
        throw OracleFileError("graph digest mismatch inside oracle file");
    }
    if (expected != nullptr && graph_digest(*expected) != digest) {
        throw OracleFileError("oracle file was built for a different graph");
    }
    try {
        oracle.index = ShortestPathIndex::build(oracle.graph, oracle.tiebreak.keys);
    } catch (const TieError& err) {
        throw OracleFileError(std::string("stored tie keys do not give unique shortest paths: ") + err.what());
    }

    r.need(n * n * 17);
    for (const CompositeLength& len : oracle.index.dist_table()) {
        if (r.length() != len) {
            throw OracleFileError("stored distance table disagrees with the graph");
        }
    }
    r.need(n * n * 20);
    for (std::size_t i = 0; i < n * n; ++i) {
        bool same = r.i32() == oracle.index.parent_table()[i];
        same = (r.i32() == oracle.index.parent_edge_table()[i]) && same;
        same = (r.u32() == oracle.index.depth_table()[i]) && same;
        same = (r.u32() == oracle.index.tin_table()[i]) && same;
        same = (r.u32() == oracle.index.tout_table()[i]) && same;
        if (!same) {
            throw OracleFileError("stored shortest-path trees disagree with the graph");
        }
    }

    const std::uint64_t entries = r.u64();
    if (entries != table_entry_count(n)) {
        throw OracleFileError("entry count " + std::to_string(entries) + " is not 4n^4 = " +
                              std::to_string(table_entry_count(n)));
    }
    r.need(entries * (4 + 4 * d + 17));
    std::vector<std::uint32_t> counts(entries);
    std::vector<EdgeId> ids(entries * d);
    std::vector<CompositeLength> lens(entries);
    for (std::size_t s = 0; s < entries; ++s) {
        counts[s] = r.u32();
        if (counts[s] > std::min(d, m)) {
            throw OracleFileError("entry " + std::to_string(s) + " holds too many edges");
        }
        for (std::size_t k = 0; k < d; ++k) {
            EdgeId e = r.i32();
            ids[s * d + k] = e;
            bool ok = k < counts[s] ? oracle.graph.valid_edge(e) && (k == 0 || ids[s * d + k - 1] < e) : e == kNoEdge;
            if (!ok) {
                throw OracleFileError("entry " + std::to_string(s) + " has a malformed edge list");
            }
        }
        lens[s] = r.length();
    }
    if (!r.at_end()) {
        throw OracleFileError("trailing bytes after the table");
    }
    oracle.tables = OracleTables::from_parts(n, d, std::move(counts), std::move(ids), std::move(lens));
    return oracle;
}

void save_oracle(const Oracle& oracle, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw OracleFileError("cannot open " + path.string() + " for writing");
    }
    const std::string bytes = serialize_oracle(oracle);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw OracleFileError("write to " + path.string() + " failed");
    }
}

Oracle load_oracle(const std::filesystem::path& path, const Graph* expected) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw OracleFileError("cannot open " + path.string());
    }
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize_oracle(bytes, expected);
}

}  // namespace ftdo
