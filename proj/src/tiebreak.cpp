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

#include "ftdo/tiebreak.hpp"

#include "ftdo/random.hpp"
#include "ftdo/shortest_path_index.hpp"

namespace ftdo {

std::uint64_t tie_key_bound(const Graph& g) {
    const std::uint64_t n = g.num_vertices();
    const std::uint64_t m = g.num_edges();
    return std::max<std::uint64_t>(1, 8 * m * n * n);
}

std::vector<std::uint64_t> draw_tie_keys(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    const std::uint64_t bound = tie_key_bound(g);
    std::vector<std::uint64_t> keys(g.num_edges());
    for (auto& k : keys) {
        k = uniform_in(rng, 1, bound);
    }
    return keys;
}

TieBreak assign_tiebreakers(const Graph& g, std::uint64_t seed) {
    for (int attempt = 0; attempt <= kMaxTieBreakRetries; ++attempt) {
        TieBreak tb{seed + static_cast<std::uint64_t>(attempt), {}};
        tb.keys = draw_tie_keys(g, tb.seed);
        try {
            ShortestPathIndex::build(g, tb.keys);
            return tb;
        } catch (const TieError&) {
        }
    }
    throw std::runtime_error("could not make shortest paths unique after " + std::to_string(kMaxTieBreakRetries) +
                             " re-seeds");
}

}  // namespace ftdo
