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

#include <algorithm>
#include <functional>
#include <queue>
#include <span>
#include <vector>

#include "ftdo/composite_length.hpp"
#include "ftdo/graph.hpp"

namespace ftdo {

/// Single-source composite distances; edges with removed[id] != 0 are skipped.
inline void composite_dijkstra(const Graph& g, std::span<const CompositeLength> w, std::span<const char> removed,
                               Vertex source, std::span<CompositeLength> dist) {
    using Item = std::pair<CompositeLength, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    std::fill(dist.begin(), dist.end(), CompositeLength::unreachable());
    dist[static_cast<std::size_t>(source)] = CompositeLength::zero();
    heap.push({CompositeLength::zero(), source});
    while (!heap.empty()) {
        auto [d, x] = heap.top();
        heap.pop();
        if (d != dist[static_cast<std::size_t>(x)]) {
            continue;
        }
        for (const Incidence& inc : g.incident(x)) {
            if (!removed.empty() && removed[static_cast<std::size_t>(inc.edge)]) {
                continue;
            }
            CompositeLength nd = d + w[static_cast<std::size_t>(inc.edge)];
            auto y = static_cast<std::size_t>(inc.neighbor);
            if (nd < dist[y]) {
                dist[y] = nd;
                heap.push({nd, inc.neighbor});
            }
        }
    }
}

}  // namespace ftdo
