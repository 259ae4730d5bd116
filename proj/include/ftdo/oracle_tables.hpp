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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ftdo/composite_length.hpp"
#include "ftdo/graph.hpp"
#include "ftdo/shortest_path_index.hpp"

namespace ftdo {

/*
 * Key (u, v, u', v', b1, b2) of the preprocessed table. The entry stores the
 * failure set D' of size <= d maximising |pi_{G-D'}(u, v)| subject to
 *   pi(u, u') and pi(v', v) avoid D',
 *   b1 => T_u(u') has no endpoint of D',
 *   b2 => T_v(v') has no endpoint of D'.
 * u' = u, v' = v, b1 = b2 = 0 is the unconstrained maximiser.
 */
struct TableKey {
    Vertex u = 0;
    Vertex v = 0;
    Vertex u_helper = 0;
    Vertex v_helper = 0;
    bool b1 = false;
    bool b2 = false;

    friend bool operator==(const TableKey&, const TableKey&) = default;
};

struct TableEntry {
    std::span<const EdgeId> d_star;
    CompositeLength l_star;
};

class TablesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool constraint_holds(const ShortestPathIndex& index, std::span<const EdgeId> failures, const TableKey& key);
inline bool constraint_holds(const ShortestPathIndex& index, const FailureSet& failures, const TableKey& key) {
    return constraint_holds(index, failures.ids(), key);
}

struct BuildOptions {
    unsigned threads = 1;
    /// Called with (subsets done, subsets total) after each block; from one thread at a time.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
    std::uint64_t progress_block = 256;
};

class OracleTables {
public:
    OracleTables() = default;

    std::size_t num_vertices() const { return n_; }
    std::size_t budget() const { return d_; }
    std::size_t entry_count() const { return lens_.size(); }

    /// Dense index of a key; throws std::out_of_range on an invalid vertex.
    std::size_t slot(const TableKey& key) const;
    TableKey key_at(std::size_t slot) const;

    TableEntry lookup(const TableKey& key) const { return entry_at(slot(key)); }
    TableEntry entry_at(std::size_t slot) const {
        return {std::span<const EdgeId>(ids_.data() + slot * d_, counts_[slot]), lens_[slot]};
    }

    // raw construction for persistence
    static OracleTables from_parts(std::size_t n, std::size_t d, std::vector<std::uint32_t> counts,
                                   std::vector<EdgeId> ids, std::vector<CompositeLength> lens);

    friend bool operator==(const OracleTables&, const OracleTables&) = default;

private:
    friend OracleTables build_tables(const Graph&, const ShortestPathIndex&, std::size_t, const BuildOptions&);

    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<std::uint32_t> counts_;
    std::vector<EdgeId> ids_;  // d_ slots per entry; unused slots are kNoEdge
    std::vector<CompositeLength> lens_;
};

/// 4 * n^4, the number of table keys.
std::uint64_t table_entry_count(std::size_t n);

/// Number of failure sets of size <= d over m edges.
std::uint64_t failure_set_count(std::size_t m, std::size_t d);

/*
 * Exhaustive preprocessing: every failure set of size <= d is enumerated once,
 * distances in G - D' are computed from every source, and each key whose
 * constraint D' satisfies keeps the larger length (ties go to the
 * lexicographically smaller sorted id sequence).
 */
OracleTables build_tables(const Graph& g, const ShortestPathIndex& index, std::size_t d,
                          const BuildOptions& options = {});

}  // namespace ftdo
