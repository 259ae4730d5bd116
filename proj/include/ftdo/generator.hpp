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

namespace ftdo {

/*
 * Random connected simple graph: a random spanning tree plus m - (n - 1)
 * distinct extra edges, weights uniform in [1, wmax]. Deterministic in seed.
 * Throws std::invalid_argument unless n - 1 <= m <= n(n-1)/2.
 */
Graph generate_gnm(std::size_t n, std::size_t m, std::uint64_t wmax, std::uint64_t seed);

}  // namespace ftdo
