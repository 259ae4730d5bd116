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

#include "ftdo/graph.hpp"
#include "ftdo/oracle_tables.hpp"
#include "ftdo/shortest_path_index.hpp"
#include "ftdo/tiebreak.hpp"

namespace ftdo {

/*
 * Everything a query needs: the validated graph, its tie keys, the
 * shortest-path index and the preprocessed tables for budget d.
 * Engines hold references into an Oracle, so keep it in place while they live.
 */
struct Oracle {
    Graph graph;
    TieBreak tiebreak;
    ShortestPathIndex index;
    OracleTables tables;

    std::size_t budget() const { return tables.budget(); }
    std::uint64_t digest() const { return graph_digest(graph); }

    /// Validates g (throws GraphError), assigns tie keys starting at seed, builds index and tables.
    static Oracle build(Graph g, std::size_t d, std::uint64_t seed, const BuildOptions& options = {});
};

}  // namespace ftdo
