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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ftdo/composite_length.hpp"
#include "ftdo/graph.hpp"
#include "ftdo/oracle.hpp"
#include "ftdo/shortest_path_index.hpp"

namespace ftdo {

struct ReplacementPath {
    std::vector<Vertex> vertices;  // u first, v last
    CompositeLength length;
};

/*
 * Brute-force ground truth: a quadratic Dijkstra per call on G - D under the
 * composite order. Shares no code with the index or the tables.
 */
class ReferenceOracle {
public:
    ReferenceOracle(const Graph& g, std::span<const std::uint64_t> tie_keys);

    struct SingleSource {
        std::vector<CompositeLength> dist;
        std::vector<Vertex> parent;
    };

    SingleSource single_source(const FailureSet& failures, Vertex source) const;

    CompositeLength dist_avoiding(const FailureSet& failures, Vertex u, Vertex v) const;

    /// nullopt when u and v are disconnected in G - D.
    std::optional<ReplacementPath> replacement_path(const FailureSet& failures, Vertex u, Vertex v) const;

    /// Composite length of a walk; throws std::invalid_argument on a non-edge step.
    CompositeLength path_length(std::span<const Vertex> path) const;

    /*
     * Smallest k such that the path is k+1 shortest paths of G interleaved
     * with k edges. A segment is a shortest path iff its composite length
     * equals the index distance of its endpoints.
     */
    std::size_t rank_of_path(const ShortestPathIndex& index, std::span<const Vertex> path) const;

    const Graph& graph() const { return graph_; }

private:
    const Graph& graph_;
    std::vector<std::uint64_t> tie_keys_;
};

enum class VerifyMode { kExhaustive, kSampled };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::kExhaustive;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
};

struct VerifyReport {
    std::uint64_t instances = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t rank_violations = 0;     // rank > |D|
    std::uint64_t recursion_violations = 0;  // rank of a sub-path does not drop
    std::uint64_t depth_violations = 0;    // recursion depth > |D| + 1
    std::uint64_t hitset_calls = 0;
    std::uint64_t contract_a_violations = 0;
    std::uint64_t contract_b_violations = 0;
    std::uint64_t contract_c_violations = 0;
    std::uint64_t unsafe_bounds = 0;  // L below the true distance
    std::uint64_t internal_errors = 0;
    std::size_t max_rank = 0;
    std::size_t max_depth = 0;
    std::size_t max_hitset_size = 0;
    std::size_t max_lookups_per_query = 0;
    std::size_t max_lookups_per_hitset = 0;
    std::size_t hitset_bound = 0;
    std::optional<std::string> first_failure;

    bool passed() const {
        return mismatches == 0 && rank_violations == 0 && recursion_violations == 0 && depth_violations == 0 &&
               contract_a_violations == 0 && contract_b_violations == 0 && contract_c_violations == 0 &&
               unsafe_bounds == 0 && internal_errors == 0;
    }
};

/*
 * Runs queries against the reference: exact answers, rank <= |D| of every
 * replacement path, rank drop at every doubly-damaged path vertex, and the
 * HitSet contract on every HitSet call made while answering.
 */
VerifyReport verify_instance(const Oracle& oracle, const VerifyOptions& options);

std::string format_report(const VerifyReport& report);

/// All failure sets of size <= d over m edges, sizes ascending, lexicographic within a size.
std::vector<FailureSet> enumerate_failure_sets(std::size_t m, std::size_t d);

}  // namespace ftdo
