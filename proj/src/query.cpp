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

#include "ftdo/query.hpp"

#include <algorithm>
#include <string>

namespace ftdo {

QueryResult QueryEngine::query(Vertex u, Vertex v, std::span<const EdgeId> failures) {
    if (!graph_.valid_vertex(u) || !graph_.valid_vertex(v)) {
        throw QueryError("vertex out of range");
    }
    for (EdgeId e : failures) {
        if (!graph_.valid_edge(e)) {
            throw QueryError("unknown edge id " + std::to_string(e));
        }
    }
    FailureSet set(std::vector<EdgeId>(failures.begin(), failures.end()));
    const std::size_t budget = hitset_.tables().budget();
    if (set.size() > budget) {
        throw QueryError(std::to_string(set.size()) + " failures exceed the budget d = " + std::to_string(budget));
    }
    QueryResult result;
    result.composite = query_r(u, v, set, set.size());
    if (!result.composite.is_unreachable()) {
        result.distance = result.composite.true_len;
    }
    result.stats = stats_;
    return result;
}

CompositeLength QueryEngine::query_r(Vertex a, Vertex b, const FailureSet& failures, std::size_t rank) {
    stats_ = {};
    const std::size_t n = index_.num_vertices();
    memo_ranks_ = rank + 1;
    memo_.assign(n * n * memo_ranks_, CompositeLength::unreachable());
    memo_set_.assign(n * n * memo_ranks_, 0);
    return recurse(a, b, failures, rank, 1);
}

CompositeLength QueryEngine::recurse(Vertex a, Vertex b, const FailureSet& failures, std::size_t rank,
                                     std::size_t depth) {
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (!index_.path_intersects(a, b, failures)) {
        return index_.dist(a, b);
    }
    if (rank == 0) {
        return CompositeLength::unreachable();
    }
    const std::size_t n = index_.num_vertices();
    const std::size_t slot = (static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * memo_ranks_ + rank;
    if (memoize_ && memo_set_[slot]) {
        return memo_[slot];
    }

    HitSetOutcome hs = hitset_.case_three(a, b, failures);
    ++stats_.hitset_calls;
    stats_.lookups += hs.lookups;
    stats_.max_hitset_size = std::max(stats_.max_hitset_size, hs.H.size());
    stats_.max_hitset_lookups = std::max(stats_.max_hitset_lookups, hs.lookups);
    if (observer_) {
        observer_(a, b, failures, hs);
    }

    CompositeLength best = hs.L;
    for (Vertex w : hs.H) {
        CompositeLength left = recurse(a, w, failures, rank - 1, depth + 1);
        CompositeLength right = recurse(w, b, failures, rank - 1, depth + 1);
        best = std::min(best, left + right);
    }
    if (memoize_) {
        memo_[slot] = best;
        memo_set_[slot] = 1;
    }
    return best;
}

}  // namespace ftdo
