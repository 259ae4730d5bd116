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

#include "ftdo/reference.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ftdo/hitset.hpp"
#include "ftdo/query.hpp"
#include "ftdo/random.hpp"

namespace ftdo {

ReferenceOracle::ReferenceOracle(const Graph& g, std::span<const std::uint64_t> tie_keys)
    : graph_(g), tie_keys_(tie_keys.begin(), tie_keys.end()) {
    if (tie_keys_.size() != g.num_edges()) {
        throw std::invalid_argument("tie key count does not match edge count");
    }
}

ReferenceOracle::SingleSource ReferenceOracle::single_source(const FailureSet& failures, Vertex source) const {
    const std::size_t n = graph_.num_vertices();
    SingleSource out{std::vector<CompositeLength>(n, CompositeLength::unreachable()), std::vector<Vertex>(n, kNoVertex)};
    std::vector<char> done(n, 0);
    out.dist[static_cast<std::size_t>(source)] = CompositeLength::zero();
    for (;;) {
        std::size_t best = n;
        for (std::size_t x = 0; x < n; ++x) {
            if (!done[x] && !out.dist[x].is_unreachable() && (best == n || out.dist[x] < out.dist[best])) {
                best = x;
            }
        }
        if (best == n) {
            break;
        }
        done[best] = 1;
        for (std::size_t id = 0; id < graph_.num_edges(); ++id) {
            const Edge& e = graph_.edges()[id];
            if (failures.contains(static_cast<EdgeId>(id))) {
                continue;
            }
            Vertex here = static_cast<Vertex>(best);
            if (e.a != here && e.b != here) {
                continue;
            }
            auto there = static_cast<std::size_t>(e.other(here));
            CompositeLength cand = out.dist[best] + CompositeLength{e.weight, tie_keys_[id]};
            if (cand < out.dist[there]) {
                out.dist[there] = cand;
                out.parent[there] = here;
            }
        }
    }
    return out;
}

CompositeLength ReferenceOracle::dist_avoiding(const FailureSet& failures, Vertex u, Vertex v) const {
    return single_source(failures, u).dist[static_cast<std::size_t>(v)];
}

std::optional<ReplacementPath> ReferenceOracle::replacement_path(const FailureSet& failures, Vertex u, Vertex v) const {
    SingleSource ss = single_source(failures, u);
    if (ss.dist[static_cast<std::size_t>(v)].is_unreachable()) {
        return std::nullopt;
    }
    ReplacementPath path;
    path.length = ss.dist[static_cast<std::size_t>(v)];
    for (Vertex x = v; x != kNoVertex; x = ss.parent[static_cast<std::size_t>(x)]) {
        path.vertices.push_back(x);
    }
    std::reverse(path.vertices.begin(), path.vertices.end());
    return path;
}

CompositeLength ReferenceOracle::path_length(std::span<const Vertex> path) const {
    CompositeLength total = CompositeLength::zero();
    for (std::size_t i = 1; i < path.size(); ++i) {
        auto id = graph_.find_edge(path[i - 1], path[i]);
        if (!id) {
            throw std::invalid_argument("path step is not an edge");
        }
        total += CompositeLength{graph_.edge(*id).weight, tie_keys_[static_cast<std::size_t>(*id)]};
    }
    return total;
}

std::size_t ReferenceOracle::rank_of_path(const ShortestPathIndex& index, std::span<const Vertex> path) const {
    if (path.size() <= 1) {
        return 0;
    }
    std::vector<CompositeLength> prefix(path.size(), CompositeLength::zero());
    for (std::size_t i = 1; i < path.size(); ++i) {
        prefix[i] = prefix[i - 1] + path_length(path.subspan(i - 1, 2));
    }
    auto is_shortest = [&](std::size_t j, std::size_t i) {
        CompositeLength seg{prefix[i].true_len - prefix[j].true_len, prefix[i].tie_key - prefix[j].tie_key};
        return seg == index.dist(path[j], path[i]);
    };
    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> best(path.size(), kInf);
    best[0] = 0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (is_shortest(0, i)) {
            best[i] = 0;
            continue;
        }
        // path[j] -> path[j+1] is the interleaved edge, path[j+1..i] the last segment
        for (std::size_t j = 0; j < i; ++j) {
            if (best[j] != kInf && is_shortest(j + 1, i)) {
                best[i] = std::min(best[i], best[j] + 1);
            }
        }
    }
    return best.back();
}

std::vector<FailureSet> enumerate_failure_sets(std::size_t m, std::size_t d) {
    std::vector<FailureSet> out;
    std::vector<EdgeId> current;
    for (std::size_t k = 0; k <= std::min(d, m); ++k) {
        // k-combinations by recursion on the next admissible id
        auto rec = [&](auto&& self, EdgeId from) -> void {
            if (current.size() == k) {
                out.emplace_back(current);
                return;
            }
            for (auto e = from; static_cast<std::size_t>(e) < m; ++e) {
                current.push_back(e);
                self(self, e + 1);
                current.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

namespace {

class Verifier {
public:
    Verifier(const Oracle& oracle)
        : oracle_(oracle),
          reference_(oracle.graph, oracle.tiebreak.keys),
          engine_(oracle.graph, oracle.index, oracle.tables) {
        report_.hitset_bound = hitset_size_bound(oracle.budget());
        engine_.set_observer([this](Vertex a, Vertex b, const FailureSet& failures, const HitSetOutcome& hs) {
            check_hitset(a, b, failures, hs);
        });
    }

    void set_failures(const FailureSet& failures) {
        failures_ = failures;
        cache_.assign(oracle_.graph.num_vertices(), std::nullopt);
    }

    void run(Vertex u, Vertex v) {
        ++report_.instances;
        u_ = u;
        v_ = v;
        QueryResult result;
        try {
            result = engine_.query(u, v, failures_.ids());
        } catch (const std::logic_error& err) {
            ++report_.internal_errors;
            fail(std::string("internal error: ") + err.what());
            return;
        }
        const CompositeLength truth = from(u).dist[static_cast<std::size_t>(v)];
        if (result.composite != truth) {
            ++report_.mismatches;
            std::ostringstream os;
            os << "query returned " << result.composite << ", reference " << truth;
            fail(os.str());
        }
        report_.max_depth = std::max(report_.max_depth, result.stats.max_depth);
        if (result.stats.max_depth > failures_.size() + 1) {
            ++report_.depth_violations;
            fail("recursion depth " + std::to_string(result.stats.max_depth));
        }
        report_.max_lookups_per_query = std::max(report_.max_lookups_per_query, result.stats.lookups);
        check_ranks(u, v);
    }

    VerifyReport take() { return std::move(report_); }

private:
    const ReferenceOracle::SingleSource& from(Vertex s) {
        auto& slot = cache_[static_cast<std::size_t>(s)];
        if (!slot) {
            slot = reference_.single_source(failures_, s);
        }
        return *slot;
    }

    std::vector<Vertex> path_from(Vertex a, Vertex b) {
        const auto& ss = from(a);
        std::vector<Vertex> path;
        if (ss.dist[static_cast<std::size_t>(b)].is_unreachable()) {
            return path;
        }
        for (Vertex x = b; x != kNoVertex; x = ss.parent[static_cast<std::size_t>(x)]) {
            path.push_back(x);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    // failures on pi(a, w), by walking the tree path explicitly
    bool damaged(Vertex a, Vertex w) const {
        auto path = oracle_.index.tree_path(a, w);
        for (std::size_t i = 1; i < path.size(); ++i) {
            if (failures_.contains(*oracle_.graph.find_edge(path[i - 1], path[i]))) {
                return true;
            }
        }
        return false;
    }

    void check_ranks(Vertex u, Vertex v) {
        const std::vector<Vertex> path = path_from(u, v);
        if (path.empty()) {
            return;
        }
        const std::size_t rank = reference_.rank_of_path(oracle_.index, path);
        report_.max_rank = std::max(report_.max_rank, rank);
        if (rank > failures_.size()) {
            ++report_.rank_violations;
            fail("replacement path rank " + std::to_string(rank) + " exceeds |D|");
        }
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            const Vertex w = path[i];
            if (!damaged(u, w) || !damaged(w, v)) {
                continue;
            }
            std::span<const Vertex> all(path);
            const std::size_t left = reference_.rank_of_path(oracle_.index, all.first(i + 1));
            const std::size_t right = reference_.rank_of_path(oracle_.index, all.subspan(i));
            if (rank == 0 || left > rank - 1 || right > rank - 1) {
                ++report_.recursion_violations;
                fail("rank does not drop at vertex " + std::to_string(w));
            }
        }
    }

    void check_hitset(Vertex a, Vertex b, const FailureSet& failures, const HitSetOutcome& hs) {
        ++report_.hitset_calls;
        report_.max_hitset_size = std::max(report_.max_hitset_size, hs.H.size());
        report_.max_lookups_per_hitset = std::max(report_.max_lookups_per_hitset, hs.lookups);
        const CompositeLength truth = from(a).dist[static_cast<std::size_t>(b)];
        if (hs.L < truth) {
            ++report_.unsafe_bounds;
            fail("HitSet bound below the true distance for (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        }
        if (hs.L != truth) {
            const std::vector<Vertex> path = path_from(a, b);
            bool hit = std::any_of(path.begin(), path.end(), [&](Vertex x) {
                return std::binary_search(hs.H.begin(), hs.H.end(), x);
            });
            if (!hit) {
                ++report_.contract_a_violations;
                fail("HitSet misses the replacement path for (" + std::to_string(a) + ", " + std::to_string(b) + ")");
            }
        }
        if (hs.H.size() > report_.hitset_bound) {
            ++report_.contract_b_violations;
            fail("|H| = " + std::to_string(hs.H.size()));
        }
        for (Vertex w : hs.H) {
            if (!damaged(a, w) || !damaged(w, b)) {
                ++report_.contract_c_violations;
                fail("H member " + std::to_string(w) + " has an intact side");
            }
        }
        (void)failures;
    }

    void fail(const std::string& what) {
        if (report_.first_failure) {
            return;
        }
        std::ostringstream os;
        os << "graph digest " << std::hex << oracle_.digest() << std::dec << ", u=" << u_ << ", v=" << v_
           << ", D=" << failures_ << ": " << what;
        report_.first_failure = os.str();
    }

    const Oracle& oracle_;
    ReferenceOracle reference_;
    QueryEngine engine_;
    VerifyReport report_;
    FailureSet failures_;
    std::vector<std::optional<ReferenceOracle::SingleSource>> cache_;
    Vertex u_ = 0;
    Vertex v_ = 0;
};

}  // namespace

VerifyReport verify_instance(const Oracle& oracle, const VerifyOptions& options) {
    Verifier verifier(oracle);
    const std::size_t n = oracle.graph.num_vertices();
    const std::size_t m = oracle.graph.num_edges();
    const std::size_t d = std::min(oracle.budget(), m);
    if (options.mode == VerifyMode::kExhaustive) {
        for (const FailureSet& failures : enumerate_failure_sets(m, d)) {
            verifier.set_failures(failures);
            for (std::size_t u = 0; u < n; ++u) {
                for (std::size_t v = 0; v < n; ++v) {
                    if (u != v) {
                        verifier.run(static_cast<Vertex>(u), static_cast<Vertex>(v));
                    }
                }
            }
        }
        return verifier.take();
    }

    Rng rng(options.seed);
    std::vector<EdgeId> ids(m);
    for (std::size_t i = 0; i < m; ++i) {
        ids[i] = static_cast<EdgeId>(i);
    }
    for (std::uint64_t s = 0; s < options.samples && n >= 2; ++s) {
        auto u = static_cast<Vertex>(uniform_below(rng, n));
        auto v = static_cast<Vertex>(uniform_below(rng, n - 1));
        if (v >= u) {
            ++v;
        }
        std::size_t k = d == 0 ? 0 : static_cast<std::size_t>(uniform_in(rng, 1, d));
        for (std::size_t i = 0; i < k; ++i) {
            std::swap(ids[i], ids[i + static_cast<std::size_t>(uniform_below(rng, m - i))]);
        }
        verifier.set_failures(FailureSet(std::vector<EdgeId>(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k))));
        verifier.run(u, v);
    }
    return verifier.take();
}

std::string format_report(const VerifyReport& r) {
    std::ostringstream os;
    os << "instances             " << r.instances << '\n'
       << "mismatches            " << r.mismatches << '\n'
       << "rank violations       " << r.rank_violations << " (max rank " << r.max_rank << ")\n"
       << "rank-drop violations  " << r.recursion_violations << '\n'
       << "depth violations      " << r.depth_violations << " (max depth " << r.max_depth << ")\n"
       << "hitset calls          " << r.hitset_calls << '\n'
       << "contract (a) misses   " << r.contract_a_violations << '\n'
       << "contract (b) overruns " << r.contract_b_violations << " (max |H| " << r.max_hitset_size << ", bound "
       << r.hitset_bound << ")\n"
       << "contract (c) breaches " << r.contract_c_violations << '\n'
       << "unsafe bounds         " << r.unsafe_bounds << '\n'
       << "internal errors       " << r.internal_errors << '\n'
       << "max lookups / query   " << r.max_lookups_per_query << '\n'
       << "max lookups / hitset  " << r.max_lookups_per_hitset << '\n'
       << "result                " << (r.passed() ? "PASS" : "FAIL") << '\n';
    if (r.first_failure) {
        os << "first failure         " << *r.first_failure << '\n';
    }
    return os.str();
}

}  // namespace ftdo
