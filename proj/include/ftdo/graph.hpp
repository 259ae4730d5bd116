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
#include <initializer_list>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ftdo {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

struct Edge {
    Vertex a = 0;
    Vertex b = 0;
    std::uint64_t weight = 1;

    Vertex other(Vertex x) const { return x == a ? b : a; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
    Vertex neighbor;
    EdgeId edge;
};

enum class GraphErrorKind {
    kMalformed,
    kVertexOutOfRange,
    kNonPositiveWeight,
    kSelfLoop,
    kDuplicateEdge,
    kDisconnected,
    kEmpty,
};

const char* to_string(GraphErrorKind kind);

struct Diagnostic {
    GraphErrorKind kind;
    std::string message;
};

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    explicit GraphError(const Diagnostic& diag) : GraphError(diag.kind, diag.message) {}

    GraphErrorKind kind() const { return kind_; }

private:
    GraphErrorKind kind_;
};

/*
 * Undirected weighted graph over vertices 0..n-1. Edge ids are positions in
 * the edge sequence and never change. Construction does not validate; use
 * validate() or parse_graph() for checked input.
 */
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Incidence> incident(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }

    /// Edge joining a and b, if any.
    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

    bool valid_vertex(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < n_; }
    bool valid_edge(EdgeId e) const { return e >= 0 && static_cast<std::size_t>(e) < edges_.size(); }

    friend bool operator==(const Graph& x, const Graph& y) { return x.n_ == y.n_ && x.edges_ == y.edges_; }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/// Checks simplicity, weights, vertex range and connectivity.
std::optional<Diagnostic> validate(const Graph& g);

/// Reads the "n m" + "a b w" text format and validates the result.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);

std::string emit_graph(const Graph& g);

/// FNV-1a over the emitted text; stable across platforms.
std::uint64_t graph_digest(const Graph& g);

/*
 * A set of failed edges, kept sorted and duplicate-free.
 */
class FailureSet {
public:
    FailureSet() = default;
    FailureSet(std::initializer_list<EdgeId> ids) : FailureSet(std::vector<EdgeId>(ids)) {}
    explicit FailureSet(std::vector<EdgeId> ids);

    std::span<const EdgeId> ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    bool contains(EdgeId e) const;

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    /// Sorted distinct endpoints of the failed edges.
    std::vector<Vertex> endpoints(const Graph& g) const;

    /// Throws std::out_of_range on an id the graph does not have.
    void check_against(const Graph& g) const;

    friend auto operator<=>(const FailureSet&, const FailureSet&) = default;
    friend bool operator==(const FailureSet&, const FailureSet&) = default;

private:
    std::vector<EdgeId> ids_;
};

std::ostream& operator<<(std::ostream& os, const FailureSet& d);

}  // namespace ftdo
