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

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>

#include "fixtures.hpp"
#include "ftdo/generator.hpp"
#include "ftdo/reference.hpp"
#include "ftdo/shortest_path_index.hpp"
#include "ftdo/tiebreak.hpp"

namespace ftdo {
namespace {

using namespace testing;

struct Built {
    Graph g;
    TieBreak tb;
    ShortestPathIndex index;

    explicit Built(Graph graph, std::uint64_t seed = 1)
        : g(std::move(graph)), tb(assign_tiebreakers(g, seed)), index(ShortestPathIndex::build(g, tb.keys)) {}
};

// Floyd-Warshall on true weights only.
std::vector<std::uint64_t> true_apsp(const Graph& g) {
    const std::size_t n = g.num_vertices();
    const std::uint64_t inf = std::numeric_limits<std::uint64_t>::max() / 4;
    std::vector<std::uint64_t> d(n * n, inf);
    for (std::size_t v = 0; v < n; ++v) {
        d[v * n + v] = 0;
    }
    for (const Edge& e : g.edges()) {
        auto a = static_cast<std::size_t>(e.a);
        auto b = static_cast<std::size_t>(e.b);
        d[a * n + b] = std::min(d[a * n + b], e.weight);
        d[b * n + a] = std::min(d[b * n + a], e.weight);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
            }
        }
    }
    return d;
}

std::vector<Graph> sample_graphs() {
    std::vector<Graph> out{g1(), g3(), g6()};
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        out.push_back(generate_gnm(8, 12, 32, seed));
    }
    out.push_back(generate_gnm(7, 9, 2, 3));  // small weights force tie keys to matter
    return out;
}

TEST(ShortestPathIndex, G1ParentsFromRootZero) {
    Built b(g1());
    EXPECT_EQ(b.index.parent(0, 1), 0);
    EXPECT_EQ(b.index.parent(0, 2), 1);
    EXPECT_EQ(b.index.parent(0, 3), 2);
    EXPECT_EQ(b.index.parent(0, 0), kNoVertex);
    EXPECT_EQ(b.index.dist(0, 3).true_len, 4u);
    EXPECT_EQ(b.index.dist(0, 2).true_len, 3u);
    EXPECT_EQ(b.index.parent_edge(0, 3), e2);
}

TEST(ShortestPathIndex, G6RootZero) {
    Built b(g6());
    EXPECT_EQ(b.index.parent(0, 5), 1);
    EXPECT_EQ(b.index.parent(0, 6), 3);
    EXPECT_EQ(b.index.dist(0, 6).true_len, 4u);
}

TEST(ShortestPathIndex, IsAncestor) {
    Built b(g1());
    EXPECT_TRUE(b.index.is_ancestor(0, 1, 3));
    EXPECT_FALSE(b.index.is_ancestor(0, 3, 1));
    EXPECT_TRUE(b.index.is_ancestor(0, 2, 2));
}

TEST(ShortestPathIndex, PathIntersects) {
    Built b(g1());
    EXPECT_TRUE(b.index.path_intersects(0, 3, FailureSet{e1}));
    EXPECT_FALSE(b.index.path_intersects(0, 1, FailureSet{e1}));
    EXPECT_FALSE(b.index.path_intersects(2, 2, FailureSet{e1}));
}

TEST(ShortestPathIndex, SubtreeTouches) {
    Built b(g1());
    EXPECT_FALSE(b.index.subtree_touches(0, 3, FailureSet{e0}));
    EXPECT_TRUE(b.index.subtree_touches(0, 1, FailureSet{e2}));
}

TEST(ShortestPathIndex, IsClean) {
    Built star(g3());
    EXPECT_TRUE(star.index.is_clean(0, 1, FailureSet{f2}, Side::kSource));
    Built b(g6());
    EXPECT_TRUE(b.index.is_clean(0, 5, FailureSet{k2}, Side::kSource));
    EXPECT_FALSE(b.index.is_clean(0, 1, FailureSet{k2}, Side::kSource));
    // Sink side: pi(6,4) = 6-3-4 avoids k2 and T_4(6) = {6}.
    EXPECT_TRUE(b.index.is_clean(4, 6, FailureSet{k2}, Side::kSink));
}

TEST(ShortestPathIndex, Lca) {
    Built b(g1());
    EXPECT_EQ(b.index.lca(0, 2, 3), 2);
    Built c(g6());
    EXPECT_EQ(c.index.lca(0, 5, 4), 1);
    for (Vertex x = 0; x < 7; ++x) {
        EXPECT_EQ(c.index.lca(3, x, x), x);
    }
}

TEST(ShortestPathIndex, TreeChildOfEdge) {
    Built b(g1());
    EXPECT_EQ(b.index.tree_child(0, e1), 2);
    EXPECT_EQ(b.index.tree_child(0, e3), kNoVertex);
    EXPECT_EQ(b.index.tree_child(3, e1), 1);
}

TEST(ShortestPathIndex, TrueLengthsMatchFloydWarshall) {
    for (const Graph& g : sample_graphs()) {
        Built b(g);
        auto fw = true_apsp(g);
        const auto n = static_cast<Vertex>(g.num_vertices());
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) {
                EXPECT_EQ(b.index.dist(u, v).true_len, fw[static_cast<std::size_t>(u * n + v)]);
                EXPECT_EQ(b.index.dist(u, v), b.index.dist(v, u));
            }
        }
    }
}

TEST(ShortestPathIndex, TreeInvariants) {
    for (const Graph& g : sample_graphs()) {
        Built b(g);
        const auto n = static_cast<Vertex>(g.num_vertices());
        for (Vertex r = 0; r < n; ++r) {
            EXPECT_EQ(b.index.dist(r, r), CompositeLength::zero());
            for (Vertex v = 0; v < n; ++v) {
                if (v != r) {
                    Vertex p = b.index.parent(r, v);
                    ASSERT_NE(p, kNoVertex);
                    EXPECT_EQ(b.index.dist(r, v), b.index.dist(r, p) + b.index.edge_weight(b.index.parent_edge(r, v)));
                    EXPECT_EQ(b.index.depth(r, v), b.index.depth(r, p) + 1);
                }
                // Ancestor by intervals agrees with an explicit parent walk.
                for (Vertex x = 0; x < n; ++x) {
                    bool walk = false;
                    for (Vertex y = v; y != kNoVertex; y = b.index.parent(r, y)) {
                        walk = walk || y == x;
                    }
                    EXPECT_EQ(b.index.is_ancestor(r, x, v), walk);
                    if (walk) {
                        EXPECT_EQ(b.index.dist(r, v), b.index.dist(r, x) + b.index.dist(x, v));
                    }
                }
            }
        }
    }
}

TEST(ShortestPathIndex, PathIntersectsMatchesReconstruction) {
    for (const Graph& g : {g1(), g3(), g6(), generate_gnm(6, 8, 5, 2)}) {
        Built b(g);
        ReferenceOracle ref(g, b.tb.keys);
        const auto n = static_cast<Vertex>(g.num_vertices());
        for (const FailureSet& d : enumerate_failure_sets(g.num_edges(), 2)) {
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex x = 0; x < n; ++x) {
                    auto path = ref.replacement_path(FailureSet{}, u, x);
                    ASSERT_TRUE(path.has_value());
                    bool hit = false;
                    for (std::size_t i = 0; i + 1 < path->vertices.size(); ++i) {
                        auto id = g.find_edge(path->vertices[i], path->vertices[i + 1]);
                        hit = hit || d.contains(*id);
                    }
                    EXPECT_EQ(b.index.path_intersects(u, x, d), hit);
                    EXPECT_EQ(b.index.tree_path(u, x), path->vertices);

                    bool touch = false;
                    for (Vertex y = 0; y < n; ++y) {
                        if (b.index.is_ancestor(u, x, y)) {
                            for (Vertex w : d.endpoints(g)) {
                                touch = touch || w == y;
                            }
                        }
                    }
                    EXPECT_EQ(b.index.subtree_touches(u, x, d), touch);
                }
            }
        }
    }
}

TEST(ShortestPathIndex, LcaMatchesWalk) {
    Built b(generate_gnm(9, 14, 32, 11));
    for (Vertex r = 0; r < 9; ++r) {
        for (Vertex x = 0; x < 9; ++x) {
            for (Vertex y = 0; y < 9; ++y) {
                Vertex expect = kNoVertex;
                for (Vertex z = x; z != kNoVertex && expect == kNoVertex; z = b.index.parent(r, z)) {
                    if (b.index.is_ancestor(r, z, y)) {
                        expect = z;
                    }
                }
                EXPECT_EQ(b.index.lca(r, x, y), expect);
            }
        }
    }
}

TEST(ShortestPathIndex, DetectsTies) {
    Graph square(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
    std::vector<std::uint64_t> equal_keys(4, 1);
    EXPECT_THROW(ShortestPathIndex::build(square, equal_keys), TieError);
    std::vector<std::uint64_t> split_keys{1, 2, 4, 8};
    EXPECT_NO_THROW(ShortestPathIndex::build(square, split_keys));
}

}  // namespace
}  // namespace ftdo
