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

#include "ftdo/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ftdo/random.hpp"

namespace ftdo {

Graph generate_gnm(std::size_t n, std::size_t m, std::uint64_t wmax, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("n must be positive");
    }
    if (wmax < 1) {
        throw std::invalid_argument("wmax must be >= 1");
    }
    const std::size_t max_edges = n * (n - 1) / 2;
    if (m + 1 < n || m > max_edges) {
        throw std::invalid_argument("no simple connected graph with n = " + std::to_string(n) + " and m = " +
                                    std::to_string(m) + " (need " + std::to_string(n - 1) + " <= m <= " +
                                    std::to_string(max_edges) + ")");
    }
    Rng rng(seed);
    std::vector<Vertex> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = static_cast<Vertex>(i);
    }
    shuffle_in_place(rng, order);

    std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
    std::vector<std::pair<Vertex, Vertex>> pairs;
    auto take = [&](Vertex a, Vertex b) {
        auto [lo, hi] = std::minmax(a, b);
        used[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)] = 1;
        pairs.push_back({lo, hi});
    };
    for (std::size_t i = 1; i < n; ++i) {
        take(order[i], order[static_cast<std::size_t>(uniform_below(rng, i))]);
    }
    std::vector<std::pair<Vertex, Vertex>> spare;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!used[a][b]) {
                spare.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
            }
        }
    }
    shuffle_in_place(rng, spare);
    for (std::size_t i = 0; pairs.size() < m; ++i) {
        take(spare[i].first, spare[i].second);
    }
    std::sort(pairs.begin(), pairs.end());

    std::vector<Edge> edges;
    for (auto [a, b] : pairs) {
        edges.push_back({a, b, uniform_in(rng, 1, wmax)});
    }
    return Graph(n, std::move(edges));
}

}  // namespace ftdo
