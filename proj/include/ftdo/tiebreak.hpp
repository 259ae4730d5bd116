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
#include <stdexcept>
#include <vector>

#include "ftdo/graph.hpp"

namespace ftdo {

inline constexpr int kMaxTieBreakRetries = 64;

struct TieBreak {
    std::uint64_t seed = 0;  // seed that produced unique shortest paths
    std::vector<std::uint64_t> keys;
};

/// Upper end of the tie key range, 8 * m * n^2.
std::uint64_t tie_key_bound(const Graph& g);

/// Per-edge tie keys in [1, tie_key_bound(g)], a pure function of (g, seed).
std::vector<std::uint64_t> draw_tie_keys(const Graph& g, std::uint64_t seed);

/*
 * Draws tie keys from seed, seed+1, ... until every shortest path of g is
 * unique under the composite order. Throws std::runtime_error after
 * kMaxTieBreakRetries failed seeds.
 */
TieBreak assign_tiebreakers(const Graph& g, std::uint64_t seed);

}  // namespace ftdo
