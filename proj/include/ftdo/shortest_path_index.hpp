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
#include <span>
#include <stdexcept>
#include <vector>

#include "ftdo/composite_length.hpp"
#include "ftdo/graph.hpp"

namespace ftdo {

/// Raised when two distinct shortest paths tie under the composite order.
class TieError : public std::runtime_error {
public:
    TieError(Vertex root, Vertex vertex);
    Vertex root() const { return root_; }
    Vertex vertex() const { return vertex_; }

private:
    Vertex root_;
    Vertex vertex_;
};

std::vector<CompositeLength> composite_weights(const Graph& g, std::span<const std::uint64_t> tie_keys);

enum class Side { kSource, kSink };

/*
 * Shortest-path trees T_r for every root r together with the all-pairs
 * composite distance table.
 *
 * Ancestry is answered from Euler-tour intervals: x is an ancestor-or-equal of
 * y in T_r iff tin(r,x) <= tin(r,y) <= tout(r,x). Children are visited in
 * ascending vertex order, so the intervals are a function of the graph and
 * tie keys alone.
 */
class ShortestPathIndex {
public:
    ShortestPathIndex() = default;

    /// Throws TieError if some vertex has two shortest-path parents.
    static ShortestPathIndex build(const Graph& g, std::span<const std::uint64_t> tie_keys);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return weights_.size(); }

    const CompositeLength& edge_weight(EdgeId e) const { return weights_[static_cast<std::size_t>(e)]; }
    std::pair<Vertex, Vertex> endpoints(EdgeId e) const { return endpoints_[static_cast<std::size_t>(e)]; }
    const std::vector<CompositeLength>& edge_weights() const { return weights_; }

    const CompositeLength& dist(Vertex u, Vertex v) const { return dist_[at(u, v)]; }
    Vertex parent(Vertex root, Vertex v) const { return parent_[at(root, v)]; }
    EdgeId parent_edge(Vertex root, Vertex v) const { return parent_edge_[at(root, v)]; }
    std::uint32_t depth(Vertex root, Vertex v) const { return depth_[at(root, v)]; }
    std::uint32_t tin(Vertex root, Vertex v) const { return tin_[at(root, v)]; }
    std::uint32_t tout(Vertex root, Vertex v) const { return tout_[at(root, v)]; }

    /// True iff x lies on pi(root, y). Reflexive.
    bool is_ancestor(Vertex root, Vertex x, Vertex y) const {
        std::uint32_t t = tin(root, y);
        return tin(root, x) <= t && t <= tout(root, x);
    }

    /// Child-side endpoint of edge e in T_root, or kNoVertex if e is not a tree edge there.
    Vertex tree_child(Vertex root, EdgeId e) const;

    /// Some edge of failures lies on pi(u, x).
    bool path_intersects(Vertex u, Vertex x, std::span<const EdgeId> failures) const;
    bool path_intersects(Vertex u, Vertex x, const FailureSet& failures) const {
        return path_intersects(u, x, failures.ids());
    }

    /// Some endpoint of a failed edge lies in the subtree T_root(w).
    bool subtree_touches(Vertex root, Vertex w, std::span<const EdgeId> failures) const;
    bool subtree_touches(Vertex root, Vertex w, const FailureSet& failures) const {
        return subtree_touches(root, w, failures.ids());
    }

    // Source side roots at u, sink side at v; the test is the same either way.
    bool is_clean(Vertex root, Vertex w, const FailureSet& failures, Side side) const;

    Vertex lca(Vertex root, Vertex x, Vertex y) const;

    /// Vertices of pi(root, v), starting at root.
    std::vector<Vertex> tree_path(Vertex root, Vertex v) const;

    const std::vector<CompositeLength>& dist_table() const { return dist_; }
    const std::vector<Vertex>& parent_table() const { return parent_; }
    const std::vector<EdgeId>& parent_edge_table() const { return parent_edge_; }
    const std::vector<std::uint32_t>& depth_table() const { return depth_; }
    const std::vector<std::uint32_t>& tin_table() const { return tin_; }
    const std::vector<std::uint32_t>& tout_table() const { return tout_; }

private:
    std::size_t at(Vertex r, Vertex v) const {
        return static_cast<std::size_t>(r) * n_ + static_cast<std::size_t>(v);
    }

    std::size_t n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> endpoints_;
    std::vector<CompositeLength> weights_;
    std::vector<CompositeLength> dist_;
    std::vector<Vertex> parent_;
    std::vector<EdgeId> parent_edge_;
    std::vector<std::uint32_t> depth_;
    std::vector<std::uint32_t> tin_;
    std::vector<std::uint32_t> tout_;
    // up_[(k * n + r) * n + v]: 2^k-th ancestor of v in T_r (root maps to itself)
    std::size_t levels_ = 0;
    std::vector<Vertex> up_;
};

}  // namespace ftdo
