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

#include "ftdo/oracle.hpp"

namespace ftdo {

Oracle Oracle::build(Graph g, std::size_t d, std::uint64_t seed, const BuildOptions& options) {
    if (auto diag = validate(g)) {
        throw GraphError(*diag);
    }
    Oracle oracle;
    oracle.graph = std::move(g);
    oracle.tiebreak = assign_tiebreakers(oracle.graph, seed);
    oracle.index = ShortestPathIndex::build(oracle.graph, oracle.tiebreak.keys);
    oracle.tables = build_tables(oracle.graph, oracle.index, d, options);
    return oracle;
}

}  // namespace ftdo
