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

#include "fixtures.hpp"
#include "ftdo/generator.hpp"
#include "ftdo/hitset.hpp"
#include "ftdo/oracle.hpp"
#include "ftdo/reference.hpp"

namespace ftdo {
namespace {

using namespace testing;
using KeyEdge = InducedKeyTree::KeyEdge;
constexpr Vertex kAux = InducedKeyTree::kAuxRoot;

bool intersects(const std::vector<Vertex>& sorted_h, const std::vector<Vertex>& path) {
    return std::any_of(path.begin(), path.end(),
                       [&](Vertex w) { return std::binary_search(sorted_h.begin(), sorted_h.end(), w); });
}

TEST(HitSet, SizeBound) {
    EXPECT_EQ(hitset_size_bound(1), 32u);
    EXPECT_EQ(hitset_size_bound(2), 16u * 64 + 16);
    EXPECT_EQ(hitset_size_bound(3), 16u * 729 + 16);
}

TEST(HitSet, OutcomeFold) {
    HitSetOutcome a{{5, 1}, {1, 4}, 2};
    HitSetOutcome b{{3, 9}, {2, 4, 7}, 3};
    a.fold(b);
    EXPECT_EQ(a.L, (CompositeLength{3, 9}));
    EXPECT_EQ(a.H, (std::vector<Vertex>{1, 2, 4, 7}));
    EXPECT_EQ(a.lookups, 5u);
}

TEST(InducedKeyTree, G1Chain) {
    Oracle o = Oracle::build(g1(), 2, 1);
    HitSetEngine engine(o.index, o.tables);
    InducedKeyTree t = engine.build_induced_key_tree(0, FailureSet{e2});
    EXPECT_EQ(t.keys, (std::vector<Vertex>{2, 3}));
    EXPECT_EQ(t.edges, (std::vector<KeyEdge>{{kAux, 2}, {2, 3}}));

    InducedKeyTree s = engine.build_induced_key_tree(0, FailureSet{e0});
    EXPECT_EQ(s.keys, (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(s.edges, (std::vector<KeyEdge>{{kAux, 0}, {0, 1}}));
}

TEST(InducedKeyTree, G6SkipsBranches) {
    Oracle o = Oracle::build(g6(), 1, 1);
    HitSetEngine engine(o.index, o.tables);
    InducedKeyTree t = engine.build_induced_key_tree(0, FailureSet{k2});
    EXPECT_EQ(t.keys, (std::vector<Vertex>{2, 3}));
    EXPECT_EQ(t.edges, (std::vector<KeyEdge>{{kAux, 2}, {2, 3}}));
}

TEST(InducedKeyTree, BranchingVertexBecomesKey) {
    Oracle o = Oracle::build(g6(), 2, 1);
    HitSetEngine engine(o.index, o.tables);
    // In T_0 the paths to 5 (via k4) and to 2, 3, 6 branch at 1, which is
    // not an endpoint of k5 = 5-2 or k6 = 3-6.
    InducedKeyTree t = engine.build_induced_key_tree(0, FailureSet{k5, k6});
    EXPECT_EQ(t.keys.size(), 5u);
    EXPECT_TRUE(std::find(t.keys.begin(), t.keys.end(), 1) != t.keys.end());
    EXPECT_EQ(t.edges.front(), (KeyEdge{kAux, 1}));
    for (const KeyEdge& e : t.edges) {
        if (e.parent != kAux) {
            EXPECT_TRUE(o.index.is_ancestor(0, e.parent, e.child));
        }
    }
}

// Brute-force check of the key tree shape on random graphs: every key is a
// marked vertex or has two children in the union of root paths, and every
// non-key vertex of that union has exactly one child in it.
TEST(InducedKeyTree, MatchesExplicitUnion) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Oracle o = Oracle::build(generate_gnm(9, 14, 32, seed), 1, seed);
        HitSetEngine engine(o.index, o.tables);
        const Vertex n = 9;
        for (const FailureSet& d : enumerate_failure_sets(14, 3)) {
            if (d.empty()) {
                continue;
            }
            for (Vertex r = 0; r < n; r += 4) {
                std::vector<Vertex> marked = d.endpoints(o.graph);
                std::vector<char> in_union(n, 0);
                for (Vertex y : marked) {
                    for (Vertex z = y; z != kNoVertex; z = o.index.parent(r, z)) {
                        in_union[static_cast<std::size_t>(z)] = 1;
                    }
                }
                std::vector<Vertex> expect;
                for (Vertex x = 0; x < n; ++x) {
                    if (!in_union[static_cast<std::size_t>(x)]) {
                        continue;
                    }
                    int children = 0;
                    for (Vertex c = 0; c < n; ++c) {
                        children += in_union[static_cast<std::size_t>(c)] && o.index.parent(r, c) == x;
                    }
                    bool is_marked = std::find(marked.begin(), marked.end(), x) != marked.end();
                    if (is_marked || children >= 2) {
                        expect.push_back(x);
                    }
                }
                InducedKeyTree t = engine.build_induced_key_tree(r, d);
                std::vector<Vertex> got = t.keys;
                std::sort(got.begin(), got.end());
                ASSERT_EQ(got, expect);
                ASSERT_EQ(t.edges.size(), t.keys.size());
                for (const KeyEdge& e : t.edges) {
                    Vertex up = o.index.parent(r, e.child);
                    while (up != kNoVertex && std::find(got.begin(), got.end(), up) == got.end()) {
                        up = o.index.parent(r, up);
                    }
                    EXPECT_EQ(e.parent, up == kNoVertex ? kAux : up);
                }
            }
        }
    }
}

TEST(HitSet, CaseOneG6) {
    Oracle o = Oracle::build(g6(), 1, 1);
    HitSetEngine engine(o.index, o.tables);
    HitSetOutcome out = engine.case_one(0, 4, 5, 6, FailureSet{k2});
    EXPECT_EQ(out.L.true_len, 7u);
    EXPECT_TRUE(out.H.empty());
    EXPECT_GE(out.lookups, 1u);
}

TEST(HitSet, CaseOneEmptyStarGivesDistance) {
    Oracle o = Oracle::build(g6(), 1, 1);
    HitSetEngine engine(o.index, o.tables);
    std::size_t seen = 0;
    for (const FailureSet& d : enumerate_failure_sets(8, 1)) {
        for (Vertex u = 0; u < 7; ++u) {
            for (Vertex v = 0; v < 7; ++v) {
                for (Vertex a = 0; a < 7; ++a) {
                    for (Vertex b = 0; b < 7; ++b) {
                        if (!o.index.is_clean(u, a, d, Side::kSource) || !o.index.is_clean(v, b, d, Side::kSink) ||
                            !o.tables.lookup({u, v, a, b, true, true}).d_star.empty()) {
                            continue;
                        }
                        HitSetOutcome out = engine.case_one(u, v, a, b, d);
                        EXPECT_TRUE(out.H.empty());
                        EXPECT_EQ(out.L, o.index.dist(u, v));
                        ++seen;
                    }
                }
            }
        }
    }
    EXPECT_GT(seen, 0u);
}

TEST(HitSet, CaseOneRejectsDirtyHelper) {
    Oracle o = Oracle::build(g1(), 1, 1);
    HitSetEngine engine(o.index, o.tables);
    EXPECT_THROW(engine.case_one(0, 2, 0, 2, FailureSet{e1}), std::logic_error);
}

TEST(HitSet, CaseTwoG6) {
    Oracle o = Oracle::build(g6(), 1, 1);
    HitSetEngine engine(o.index, o.tables);
    ASSERT_TRUE(o.index.is_clean(4, 6, FailureSet{k2}, Side::kSink));
    HitSetOutcome out = engine.case_two(0, 4, 6, FailureSet{k2}, Direction::kForward);
    EXPECT_EQ(out.L.true_len, 7u);
}

TEST(HitSet, CaseTwoG1) {
    Oracle o = Oracle::build(g1(), 1, 1);
    HitSetEngine engine(o.index, o.tables);
    ASSERT_TRUE(o.index.is_clean(2, 3, FailureSet{e1}, Side::kSink));
    HitSetOutcome out = engine.case_two(0, 2, 3, FailureSet{e1}, Direction::kForward);
    EXPECT_EQ(out.L.true_len, 6u);
}

TEST(HitSet, CaseTwoRejectsDirtyHelper) {
    Oracle o = Oracle::build(g1(), 1, 1);
    HitSetEngine engine(o.index, o.tables);
    EXPECT_THROW(engine.case_two(0, 2, 1, FailureSet{e1}, Direction::kForward), std::logic_error);
}

TEST(HitSet, CaseThreeFixtures) {
    Oracle o6 = Oracle::build(g6(), 1, 1);
    HitSetEngine six(o6.index, o6.tables);
    HitSetOutcome a = six.case_three(0, 4, FailureSet{k2});
    EXPECT_EQ(a.L.true_len, 7u);
    EXPECT_FALSE(intersects(a.H, {0, 1, 2, 6, 3, 4}));

    Oracle o1 = Oracle::build(g1(), 2, 1);
    HitSetEngine one(o1.index, o1.tables);
    EXPECT_EQ(one.case_three(0, 2, FailureSet{e1}).L.true_len, 6u);

    HitSetOutcome c = one.case_three(0, 2, FailureSet{e1, e2});
    for (Vertex w : c.H) {
        EXPECT_TRUE(o1.index.path_intersects(0, w, FailureSet{e1, e2}));
        EXPECT_TRUE(o1.index.path_intersects(w, 2, FailureSet{e1, e2}));
    }
    if (c.H.empty()) {
        EXPECT_TRUE(c.L.is_unreachable());
    }
}

TEST(HitSet, CaseThreeRequiresDamagedPath) {
    Oracle o = Oracle::build(g1(), 1, 1);
    HitSetEngine engine(o.index, o.tables);
    EXPECT_THROW(engine.case_three(0, 1, FailureSet{e2}), std::logic_error);
    EXPECT_THROW(engine.case_three(0, 2, FailureSet{}), std::logic_error);
}

struct ContractTally {
    std::size_t calls = 0;
    std::size_t max_h = 0;
};

// Contracts (a), (b), (c) and safety of L for every damaged (u, v, D).
ContractTally check_contracts(const Graph& g, std::size_t d, std::uint64_t seed) {
    Oracle o = Oracle::build(g, d, seed);
    HitSetEngine engine(o.index, o.tables);
    ReferenceOracle ref(o.graph, o.tiebreak.keys);
    const auto n = static_cast<Vertex>(g.num_vertices());
    ContractTally tally;
    for (const FailureSet& fs : enumerate_failure_sets(g.num_edges(), d)) {
        for (Vertex u = 0; u < n; ++u) {
            auto ss = ref.single_source(fs, u);
            for (Vertex v = 0; v < n; ++v) {
                if (!o.index.path_intersects(u, v, fs)) {
                    continue;
                }
                HitSetOutcome out = engine.case_three(u, v, fs);
                ++tally.calls;
                tally.max_h = std::max(tally.max_h, out.H.size());
                const CompositeLength truth = ss.dist[static_cast<std::size_t>(v)];
                EXPECT_GE(out.L, truth) << "unsafe L for " << u << "," << v << " D=" << fs;
                EXPECT_LE(out.H.size(), hitset_size_bound(d));
                EXPECT_TRUE(std::is_sorted(out.H.begin(), out.H.end()));
                for (Vertex w : out.H) {
                    EXPECT_TRUE(o.index.path_intersects(u, w, fs) && o.index.path_intersects(w, v, fs));
                }
                if (out.L != truth) {
                    auto path = ref.replacement_path(fs, u, v);
                    EXPECT_TRUE(path && intersects(out.H, path->vertices))
                        << "contract (a) for " << u << "," << v << " D=" << fs;
                }
            }
        }
    }
    return tally;
}

TEST(HitSetContracts, Fixtures) {
    for (std::size_t d = 1; d <= 3; ++d) {
        EXPECT_GT(check_contracts(g1(), d, 1).calls, 0u);
        EXPECT_GT(check_contracts(g3(), d, 1).calls, 0u);
        EXPECT_GT(check_contracts(g6(), d, 1).calls, 0u);
    }
}

TEST(HitSetContracts, RandomSmallGraphs) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        check_contracts(generate_gnm(7, 10, 32, seed), 2, seed);
        check_contracts(generate_gnm(6, 9, 3, seed), 3, seed);
    }
}

}  // namespace
}  // namespace ftdo
