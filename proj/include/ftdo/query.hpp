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
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ftdo/composite_length.hpp"
#include "ftdo/graph.hpp"
#include "ftdo/hitset.hpp"
#include "ftdo/oracle_tables.hpp"
#include "ftdo/shortest_path_index.hpp"

namespace ftdo {

class QueryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct QueryStats {
    std::size_t lookups = 0;
    std::size_t hitset_calls = 0;
    std::size_t max_depth = 0;
    std::size_t max_hitset_size = 0;
    std::size_t max_hitset_lookups = 0;
};

struct QueryResult {
    std::optional<std::uint64_t> distance;  // nullopt when u and v are disconnected in G - D
    CompositeLength composite;
    QueryStats stats;
};

/*
 * Rank-bounded recursive query. query_r(a, b, D, r) returns |pi_{G-D}(a, b)|
 * whenever that path splits into at most r+1 shortest paths of G joined by at
 * most r edges, and never returns less than the true distance.
 *
 * Not thread-safe per instance (memo and stats are members); use one engine
 * per thread over the same shared index and tables.
 */
class QueryEngine {
public:
    using HitSetObserver = std::function<void(Vertex, Vertex, const FailureSet&, const HitSetOutcome&)>;

    QueryEngine(const Graph& g, const ShortestPathIndex& index, const OracleTables& tables, bool memoize = true)
        : graph_(g), index_(index), hitset_(index, tables), memoize_(memoize) {}

    /// Throws QueryError on a bad vertex, unknown edge, or more than d distinct failures.
    QueryResult query(Vertex u, Vertex v, std::span<const EdgeId> failures);

    CompositeLength query_r(Vertex a, Vertex b, const FailureSet& failures, std::size_t rank);

    void set_observer(HitSetObserver observer) { observer_ = std::move(observer); }
    const QueryStats& last_stats() const { return stats_; }
    const HitSetEngine& hitset() const { return hitset_; }

private:
    CompositeLength recurse(Vertex a, Vertex b, const FailureSet& failures, std::size_t rank, std::size_t depth);

    const Graph& graph_;
    const ShortestPathIndex& index_;
    HitSetEngine hitset_;
    bool memoize_;
    HitSetObserver observer_;
    QueryStats stats_;
    std::size_t memo_ranks_ = 0;
    std::vector<CompositeLength> memo_;
    std::vector<char> memo_set_;
};

}  // namespace ftdo
