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
#include <functional>
#include <limits>

#include "fixtures.hpp"
#include "ftdo/generator.hpp"
#include "ftdo/oracle.hpp"
#include "ftdo/reference.hpp"

namespace ftdo {
namespace {

using namespace testing;

struct Ref {
    Oracle oracle;
    ReferenceOracle ref;

    Ref(Graph g, std::size_t d, std::uint64_t seed = 1)
        : oracle(Oracle::build(std::move(g), d, seed)), ref(oracle.graph, oracle.tiebreak.keys) {}
};

// Bellman-Ford on true weights of G - D.
std::vector<std::uint64_t> bellman_ford(const Graph& g, const FailureSet& d, Vertex s) {
    const std::uint64_t inf = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> dist(g.num_vertices(), inf);
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t round = 0; round < g.num_vertices(); ++round) {
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
            if (d.contains(e)) {
                continue;
            }
            const Edge& ed = g.edge(e);
            auto a = static_cast<std::size_t>(ed.a);
            auto b = static_cast<std::size_t>(ed.b);
            if (dist[a] != inf) {
                dist[b] = std::min(dist[b], dist[a] + ed.weight);
            }
            if (dist[b] != inf) {
                dist[a] = std::min(dist[a], dist[b] + ed.weight);
            }
        }
    }
    return dist;
}

// Rank by trying every way to cut the path into shortest segments joined by
// single edges.
std::size_t brute_rank(const ShortestPathIndex& index, const ReferenceOracle& ref, const std::vector<Vertex>& p) {
    auto shortest = [&](std::size_t i, std::size_t j) {
        std::span<const Vertex> seg(p.data() + i, j - i + 1);
        return ref.path_length(seg) == index.dist(p[i], p[j]);
    };
    std::function<std::size_t(std::size_t)> from = [&](std::size_t i) -> std::size_t {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t j = i; j < p.size(); ++j) {
            if (!shortest(i, j)) {
                continue;
            }
            if (j + 1 == p.size()) {
                return 0;
            }
            // p[j]-p[j+1] is the interleaved edge; the next segment starts at j+1
            best = std::min(best, from(j + 1) + 1);
        }
        return best;
    };
    return from(0);
}

TEST(Reference, DistAvoidingG1) {
    Ref r(g1(), 2);
    EXPECT_EQ(r.ref.dist_avoiding(FailureSet{e1}, 0, 2).true_len, 6u);
    EXPECT_TRUE(r.ref.dist_avoiding(FailureSet{e1, e2}, 0, 2).is_unreachable());
    EXPECT_EQ(r.ref.dist_avoiding(FailureSet{}, 0, 2).true_len, 3u);
}

TEST(Reference, ReplacementPaths) {
    Ref r1(g1(), 1);
    auto p = r1.ref.replacement_path(FailureSet{e1}, 0, 2);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->vertices, (std::vector<Vertex>{0, 3, 2}));
    EXPECT_EQ(p->length.true_len, 6u);
    EXPECT_FALSE(r1.ref.replacement_path(FailureSet{e1, e2}, 0, 2).has_value());

    Ref r6(g6(), 1);
    auto q = r6.ref.replacement_path(FailureSet{k2}, 0, 4);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(q->length.true_len, 7u);
    // Through 5 and 6 the detour costs 10; through 6 alone it costs 7.
    EXPECT_EQ(q->vertices, (std::vector<Vertex>{0, 1, 2, 6, 3, 4}));
}

TEST(Reference, EmptyFailureSetFollowsTree) {
    for (const Graph& g : {g1(), g6(), generate_gnm(9, 14, 32, 2)}) {
        Ref r(g, 1);
        const auto n = static_cast<Vertex>(g.num_vertices());
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) {
                EXPECT_EQ(r.ref.dist_avoiding(FailureSet{}, u, v), r.oracle.index.dist(u, v));
                EXPECT_EQ(r.ref.replacement_path(FailureSet{}, u, v)->vertices, r.oracle.index.tree_path(u, v));
            }
        }
    }
}

TEST(Reference, TrueLengthsMatchBellmanFord) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        Graph g = generate_gnm(7, 11, 9, seed);
        Ref r(g, 1, seed);
        for (const FailureSet& fs : enumerate_failure_sets(g.num_edges(), 3)) {
            for (Vertex u = 0; u < 7; ++u) {
                auto bf = bellman_ford(g, fs, u);
                auto ss = r.ref.single_source(fs, u);
                for (std::size_t v = 0; v < 7; ++v) {
                    if (bf[v] == std::numeric_limits<std::uint64_t>::max()) {
                        EXPECT_TRUE(ss.dist[v].is_unreachable());
                    } else {
                        EXPECT_EQ(ss.dist[v].true_len, bf[v]);
                        auto p = r.ref.replacement_path(fs, u, static_cast<Vertex>(v));
                        ASSERT_TRUE(p.has_value());
                        EXPECT_EQ(r.ref.path_length(p->vertices), ss.dist[v]);
                        for (std::size_t i = 0; i + 1 < p->vertices.size(); ++i) {
                            auto id = g.find_edge(p->vertices[i], p->vertices[i + 1]);
                            ASSERT_TRUE(id.has_value());
                            EXPECT_FALSE(fs.contains(*id));
                        }
                    }
                }
            }
        }
    }
}

TEST(Reference, RankExamples) {
    Ref r1(g1(), 1);
    std::vector<Vertex> p{0, 3, 2};
    EXPECT_EQ(r1.ref.rank_of_path(r1.oracle.index, p), 1u);
    std::vector<Vertex> intact{0, 1, 2, 3};
    EXPECT_EQ(r1.ref.rank_of_path(r1.oracle.index, intact), 0u);
    std::vector<Vertex> single{2};
    EXPECT_EQ(r1.ref.rank_of_path(r1.oracle.index, single), 0u);

    Ref r6(g6(), 1);
    std::vector<Vertex> q{0, 1, 2, 6, 3, 4};
    EXPECT_LE(r6.ref.rank_of_path(r6.oracle.index, q), 1u);
}

TEST(Reference, RankMatchesBruteForce) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        Graph g = generate_gnm(8, 12, 32, seed);
        Ref r(g, 1, seed);
        for (const FailureSet& fs : enumerate_failure_sets(g.num_edges(), 3)) {
            for (Vertex u = 0; u < 8; ++u) {
                for (Vertex v = 0; v < 8; ++v) {
                    auto p = r.ref.replacement_path(fs, u, v);
                    if (!p) {
                        continue;
                    }
                    std::size_t rank = r.ref.rank_of_path(r.oracle.index, p->vertices);
                    ASSERT_EQ(rank, brute_rank(r.oracle.index, r.ref, p->vertices));
                    EXPECT_LE(rank, fs.size());
                }
            }
        }
    }
}

TEST(Reference, EnumerateFailureSets) {
    auto sets = enumerate_failure_sets(4, 2);
    ASSERT_EQ(sets.size(), 11u);
    EXPECT_TRUE(sets.front().empty());
    EXPECT_TRUE(std::is_sorted(sets.begin(), sets.end(),
                               [](const FailureSet& a, const FailureSet& b) { return a.size() < b.size(); }));
    EXPECT_EQ(enumerate_failure_sets(4, 7).size(), 16u);
    EXPECT_EQ(enumerate_failure_sets(14, 3).size(), 470u);
}

TEST(Verify, G1Exhaustive) {
    Oracle o = Oracle::build(g1(), 2, 1);
    VerifyReport r = verify_instance(o, {});
    EXPECT_TRUE(r.passed()) << format_report(r);
    EXPECT_EQ(r.instances, 4u * 3 * 11);
    EXPECT_LE(r.max_rank, 2u);
}

TEST(Verify, G6Exhaustive) {
    Oracle o = Oracle::build(g6(), 1, 1);
    VerifyReport r = verify_instance(o, {});
    EXPECT_TRUE(r.passed()) << format_report(r);
    EXPECT_LE(r.max_rank, 1u);
}

TEST(Verify, RandomExhaustive) {
    Oracle o = Oracle::build(generate_gnm(8, 12, 32, 7), 2, 7);
    VerifyReport r = verify_instance(o, {});
    EXPECT_TRUE(r.passed()) << format_report(r);
    EXPECT_EQ(r.instances, 8u * 7 * (1 + 12 + 66));
    EXPECT_GT(r.hitset_calls, 0u);
    EXPECT_LE(r.max_hitset_size, r.hitset_bound);
}

TEST(Verify, SampledCountsInstances) {
    Oracle o = Oracle::build(generate_gnm(8, 12, 32, 3), 3, 3);
    VerifyOptions options;
    options.mode = VerifyMode::kSampled;
    options.samples = 500;
    options.seed = 4;
    VerifyReport a = verify_instance(o, options);
    EXPECT_TRUE(a.passed()) << format_report(a);
    EXPECT_EQ(a.instances, 500u);
    VerifyReport b = verify_instance(o, options);
    EXPECT_EQ(format_report(a), format_report(b));
}

// A deliberately corrupted table must be caught.
TEST(Verify, DetectsCorruptTables) {
    Oracle o = Oracle::build(g6(), 1, 1);
    const std::size_t total = o.tables.entry_count();
    std::vector<std::uint32_t> counts(total);
    std::vector<EdgeId> ids(total, kNoEdge);
    std::vector<CompositeLength> lens(total);
    for (std::size_t s = 0; s < total; ++s) {
        TableEntry e = o.tables.entry_at(s);
        counts[s] = static_cast<std::uint32_t>(e.d_star.size());
        if (!e.d_star.empty()) {
            ids[s] = e.d_star[0];
        }
        TableKey key = o.tables.key_at(s);
        // Understate every constrained distance as the intact one.
        lens[s] = key.u == 0 && key.v == 4 ? o.index.dist(0, 4) : e.l_star;
    }
    o.tables = OracleTables::from_parts(7, 1, counts, ids, lens);
    VerifyReport r = verify_instance(o, {});
    EXPECT_FALSE(r.passed());
    EXPECT_GT(r.mismatches + r.unsafe_bounds, 0u);
    ASSERT_TRUE(r.first_failure.has_value());
}

}  // namespace
}  // namespace ftdo
