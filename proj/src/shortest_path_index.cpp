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

#include "ftdo/shortest_path_index.hpp"

#include "dijkstra.hpp"

#include <algorithm>
#include <string>

namespace ftdo {

TieError::TieError(Vertex root, Vertex vertex)
    : std::runtime_error("shortest path tie from root " + std::to_string(root) + " to vertex " + std::to_string(vertex)),
      root_(root),
      vertex_(vertex) {}

std::vector<CompositeLength> composite_weights(const Graph& g, std::span<const std::uint64_t> tie_keys) {
    if (tie_keys.size() != g.num_edges()) {
        throw std::invalid_argument("tie key count does not match edge count");
    }
    std::vector<CompositeLength> out(g.num_edges());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = {g.edges()[i].weight, tie_keys[i]};
    }
    return out;
}

ShortestPathIndex ShortestPathIndex::build(const Graph& g, std::span<const std::uint64_t> tie_keys) {
    const std::vector<CompositeLength> w = composite_weights(g, tie_keys);
    ShortestPathIndex idx;
    const std::size_t n = g.num_vertices();
    idx.n_ = n;
    for (const Edge& e : g.edges()) {
        idx.endpoints_.push_back({e.a, e.b});
    }
    idx.weights_ = w;
    idx.dist_.assign(n * n, CompositeLength::unreachable());
    idx.parent_.assign(n * n, kNoVertex);
    idx.parent_edge_.assign(n * n, kNoEdge);
    idx.depth_.assign(n * n, 0);
    idx.tin_.assign(n * n, 0);
    idx.tout_.assign(n * n, 0);
    idx.levels_ = 1;
    while ((std::size_t{1} << idx.levels_) < n) {
        ++idx.levels_;
    }
    idx.up_.assign(idx.levels_ * n * n, kNoVertex);

    std::vector<std::vector<Vertex>> children(n);
    for (std::size_t r = 0; r < n; ++r) {
        auto root = static_cast<Vertex>(r);
        std::span<CompositeLength> dist(idx.dist_.data() + r * n, n);
        composite_dijkstra(g, w, {}, root, dist);

        for (std::size_t v = 0; v < n; ++v) {
            children[v].clear();
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (v == r || dist[v].is_unreachable()) {
                continue;
            }
            int tight = 0;
            for (const Incidence& inc : g.incident(static_cast<Vertex>(v))) {
                auto x = static_cast<std::size_t>(inc.neighbor);
                if (dist[x] + w[static_cast<std::size_t>(inc.edge)] == dist[v]) {
                    ++tight;
                    idx.parent_[r * n + v] = inc.neighbor;
                    idx.parent_edge_[r * n + v] = inc.edge;
                }
            }
            if (tight != 1) {
                throw TieError(root, static_cast<Vertex>(v));
            }
            children[static_cast<std::size_t>(idx.parent_[r * n + v])].push_back(static_cast<Vertex>(v));
        }

        // iterative DFS; children were appended in ascending order
        std::uint32_t clock = 0;
        std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
        idx.tin_[r * n + r] = clock++;
        while (!stack.empty()) {
            auto& [x, next] = stack.back();
            const auto& kids = children[static_cast<std::size_t>(x)];
            if (next < kids.size()) {
                Vertex c = kids[next++];
                idx.depth_[r * n + static_cast<std::size_t>(c)] = idx.depth_[r * n + static_cast<std::size_t>(x)] + 1;
                idx.tin_[r * n + static_cast<std::size_t>(c)] = clock++;
                stack.push_back({c, 0});
            } else {
                idx.tout_[r * n + static_cast<std::size_t>(x)] = clock - 1;
                stack.pop_back();
            }
        }

        for (std::size_t v = 0; v < n; ++v) {
            Vertex p = idx.parent_[r * n + v];
            idx.up_[r * n + v] = p == kNoVertex ? static_cast<Vertex>(v) : p;
        }
        for (std::size_t k = 1; k < idx.levels_; ++k) {
            for (std::size_t v = 0; v < n; ++v) {
                Vertex mid = idx.up_[((k - 1) * n + r) * n + v];
                idx.up_[(k * n + r) * n + v] = idx.up_[((k - 1) * n + r) * n + static_cast<std::size_t>(mid)];
            }
        }
    }
    return idx;
}

Vertex ShortestPathIndex::tree_child(Vertex root, EdgeId e) const {
    auto [a, b] = endpoints_[static_cast<std::size_t>(e)];
    if (parent_edge(root, b) == e) {
        return b;
    }
    if (parent_edge(root, a) == e) {
        return a;
    }
    return kNoVertex;
}

bool ShortestPathIndex::path_intersects(Vertex u, Vertex x, std::span<const EdgeId> failures) const {
    for (EdgeId e : failures) {
        Vertex c = tree_child(u, e);
        if (c != kNoVertex && is_ancestor(u, c, x)) {
            return true;
        }
    }
    return false;
}

bool ShortestPathIndex::subtree_touches(Vertex root, Vertex w, std::span<const EdgeId> failures) const {
    for (EdgeId e : failures) {
        auto [a, b] = endpoints_[static_cast<std::size_t>(e)];
        if (is_ancestor(root, w, a) || is_ancestor(root, w, b)) {
            return true;
        }
    }
    return false;
}

bool ShortestPathIndex::is_clean(Vertex root, Vertex w, const FailureSet& failures, Side /*side*/) const {
    return !path_intersects(root, w, failures) && !subtree_touches(root, w, failures);
}

Vertex ShortestPathIndex::lca(Vertex root, Vertex x, Vertex y) const {
    if (is_ancestor(root, x, y)) {
        return x;
    }
    if (is_ancestor(root, y, x)) {
        return y;
    }
    const std::size_t r = static_cast<std::size_t>(root);
    for (std::size_t k = levels_; k-- > 0;) {
        Vertex jump = up_[(k * n_ + r) * n_ + static_cast<std::size_t>(x)];
        if (!is_ancestor(root, jump, y)) {
            x = jump;
        }
    }
    return parent(root, x);
}

std::vector<Vertex> ShortestPathIndex::tree_path(Vertex root, Vertex v) const {
    std::vector<Vertex> path;
    for (Vertex x = v; x != kNoVertex; x = parent(root, x)) {
        path.push_back(x);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace ftdo
