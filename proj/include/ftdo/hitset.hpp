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

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ftdo/composite_length.hpp"
#include "ftdo/graph.hpp"
#include "ftdo/oracle_tables.hpp"
#include "ftdo/shortest_path_index.hpp"

namespace ftdo {

/// Declared constant C_H in |H| <= C_H * d^6 + kHitSetSlack.
inline constexpr std::size_t kHitSetConstant = 16;
inline constexpr std::size_t kHitSetSlack = 16;

inline std::size_t hitset_size_bound(std::size_t d) {
    std::size_t d6 = d * d * d * d * d * d;
    return kHitSetConstant * d6 + kHitSetSlack;
}

/*
 * Result of one HitSet invocation for (u, v, D):
 *   L is an upper bound on |pi_{G-D}(u, v)| realised by a walk in G - D;
 *   either L is exact, or pi_{G-D}(u, v) passes through a vertex of H;
 *   every w in H has failures on both pi(u, w) and pi(w, v).
 * `lookups` counts table reads spent producing it.
 */
struct HitSetOutcome {
    CompositeLength L = CompositeLength::unreachable();
    std::vector<Vertex> H;  // sorted, distinct
    std::size_t lookups = 0;

    void fold(const HitSetOutcome& other);
};

/*
 * T_induced restricted to its key vertices. The auxiliary root sits above the
 * real root and is denoted kAuxRoot; every other key vertex's T_key parent is
 * its nearest key ancestor.
 */
struct InducedKeyTree {
    static constexpr Vertex kAuxRoot = -2;

    struct KeyEdge {
        Vertex parent;
        Vertex child;
        friend bool operator==(const KeyEdge&, const KeyEdge&) = default;
    };

    Vertex root = kNoVertex;
    std::vector<Vertex> keys;  // real key vertices in Euler order of T_root
    std::vector<KeyEdge> edges;
};

enum class Direction { kForward, kMirrored };

class HitSetEngine {
public:
    HitSetEngine(const ShortestPathIndex& index, const OracleTables& tables) : index_(index), tables_(tables) {}

    InducedKeyTree build_induced_key_tree(Vertex root, const FailureSet& failures) const;

    /// Requires u_helper u-clean and v_helper v-clean; throws std::logic_error otherwise.
    HitSetOutcome case_one(Vertex u, Vertex v, Vertex u_helper, Vertex v_helper, const FailureSet& failures) const;

    /*
     * Forward: `helper` is a v-clean vertex and u-side candidates are searched
     * in T_u. Mirrored: `helper` is u-clean and the search runs in T_v.
     */
    HitSetOutcome case_two(Vertex u, Vertex v, Vertex helper, const FailureSet& failures, Direction direction) const;

    /// Full HitSet. Requires pi(u, v) to meet a failed edge.
    HitSetOutcome case_three(Vertex u, Vertex v, const FailureSet& failures) const;

    const ShortestPathIndex& index() const { return index_; }
    const OracleTables& tables() const { return tables_; }

private:
    HitSetOutcome case_two_with_tree(Vertex u, Vertex v, Vertex helper, const FailureSet& failures,
                                     Direction direction, const InducedKeyTree& tree) const;
    TableEntry guarded_lookup(const TableKey& key, const FailureSet& failures, HitSetOutcome& out) const;
    void add_hit(Vertex u, Vertex v, Vertex w, const FailureSet& failures, HitSetOutcome& out) const;

    const ShortestPathIndex& index_;
    const OracleTables& tables_;
};

}  // namespace ftdo
