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

#include "ftdo/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>

namespace ftdo {

const char* to_string(GraphErrorKind kind) {
    switch (kind) {
        case GraphErrorKind::kMalformed: return "malformed";
        case GraphErrorKind::kVertexOutOfRange: return "vertex out of range";
        case GraphErrorKind::kNonPositiveWeight: return "nonpositive weight";
        case GraphErrorKind::kSelfLoop: return "self-loop";
        case GraphErrorKind::kDuplicateEdge: return "duplicate edge";
        case GraphErrorKind::kDisconnected: return "disconnected";
        case GraphErrorKind::kEmpty: return "empty graph";
    }
    return "unknown";
}

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(n) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        auto id = static_cast<EdgeId>(i);
        if (valid_vertex(e.a) && valid_vertex(e.b)) {
            adjacency_[static_cast<std::size_t>(e.a)].push_back({e.b, id});
            if (e.a != e.b) {
                adjacency_[static_cast<std::size_t>(e.b)].push_back({e.a, id});
            }
        }
    }
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
    if (!valid_vertex(a) || !valid_vertex(b)) {
        return std::nullopt;
    }
    for (const Incidence& inc : incident(a)) {
        if (inc.neighbor == b) {
            return inc.edge;
        }
    }
    return std::nullopt;
}

namespace {

std::string edge_label(std::size_t id, const Edge& e) {
    std::ostringstream os;
    os << "edge " << id << " (" << e.a << ", " << e.b << ", " << e.weight << ")";
    return os.str();
}

}  // namespace

std::optional<Diagnostic> validate(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n == 0) {
        return Diagnostic{GraphErrorKind::kEmpty, "graph has no vertices"};
    }
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edges()[i];
        if (!g.valid_vertex(e.a) || !g.valid_vertex(e.b)) {
            return Diagnostic{GraphErrorKind::kVertexOutOfRange, edge_label(i, e) + ": endpoint outside 0.." + std::to_string(n - 1)};
        }
        if (e.weight < 1) {
            return Diagnostic{GraphErrorKind::kNonPositiveWeight, edge_label(i, e) + ": weight must be >= 1"};
        }
        if (e.a == e.b) {
            return Diagnostic{GraphErrorKind::kSelfLoop, edge_label(i, e) + ": self-loop"};
        }
        auto key = std::minmax(e.a, e.b);
        if (!seen.insert({key.first, key.second}).second) {
            return Diagnostic{GraphErrorKind::kDuplicateEdge, edge_label(i, e) + ": duplicate of an earlier edge"};
        }
    }
    std::vector<char> reached(n, 0);
    std::vector<Vertex> stack{0};
    reached[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (const Incidence& inc : g.incident(x)) {
            auto y = static_cast<std::size_t>(inc.neighbor);
            if (!reached[y]) {
                reached[y] = 1;
                ++count;
                stack.push_back(inc.neighbor);
            }
        }
    }
    if (count != n) {
        return Diagnostic{GraphErrorKind::kDisconnected,
                          "graph is disconnected: " + std::to_string(count) + " of " + std::to_string(n) + " vertices reachable from 0"};
    }
    return std::nullopt;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

std::int64_t parse_int(std::string_view token, std::size_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw GraphError(GraphErrorKind::kMalformed,
                         "line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::pair<std::int64_t, std::int64_t>> header;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            continue;
        }
        if (!header) {
            if (tokens.size() != 2) {
                throw GraphError(GraphErrorKind::kMalformed, "line " + std::to_string(line_no) + ": header must be \"n m\"");
            }
            std::int64_t n = parse_int(tokens[0], line_no);
            std::int64_t m = parse_int(tokens[1], line_no);
            if (n < 0 || m < 0 || n > std::numeric_limits<Vertex>::max() || m > std::numeric_limits<EdgeId>::max()) {
                throw GraphError(GraphErrorKind::kMalformed, "line " + std::to_string(line_no) + ": counts out of range");
            }
            header = {n, m};
            continue;
        }
        if (static_cast<std::int64_t>(edges.size()) == header->second) {
            throw GraphError(GraphErrorKind::kMalformed, "line " + std::to_string(line_no) + ": more edge lines than declared");
        }
        if (tokens.size() != 3) {
            throw GraphError(GraphErrorKind::kMalformed, "line " + std::to_string(line_no) + ": edge line must be \"a b w\"");
        }
        std::int64_t a = parse_int(tokens[0], line_no);
        std::int64_t b = parse_int(tokens[1], line_no);
        std::int64_t w = parse_int(tokens[2], line_no);
        if (a < 0 || b < 0 || a >= header->first || b >= header->first) {
            throw GraphError(GraphErrorKind::kVertexOutOfRange, "line " + std::to_string(line_no) + ": endpoint out of range");
        }
        if (w < 1) {
            throw GraphError(GraphErrorKind::kNonPositiveWeight, "line " + std::to_string(line_no) + ": weight must be >= 1");
        }
        edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<std::uint64_t>(w)});
    }
    if (!header) {
        throw GraphError(GraphErrorKind::kMalformed, "missing \"n m\" header");
    }
    if (static_cast<std::int64_t>(edges.size()) != header->second) {
        throw GraphError(GraphErrorKind::kMalformed,
                         "expected " + std::to_string(header->second) + " edge lines, found " + std::to_string(edges.size()));
    }
    Graph g(static_cast<std::size_t>(header->first), std::move(edges));
    if (auto diag = validate(g)) {
        throw GraphError(*diag);
    }
    return g;
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

std::string emit_graph(const Graph& g) {
    std::ostringstream os;
    os << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) {
        os << e.a << ' ' << e.b << ' ' << e.weight << '\n';
    }
    return os.str();
}

std::uint64_t graph_digest(const Graph& g) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (char c : emit_graph(g)) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

FailureSet::FailureSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool FailureSet::contains(EdgeId e) const {
    return std::binary_search(ids_.begin(), ids_.end(), e);
}

std::vector<Vertex> FailureSet::endpoints(const Graph& g) const {
    std::vector<Vertex> out;
    out.reserve(ids_.size() * 2);
    for (EdgeId id : ids_) {
        out.push_back(g.edge(id).a);
        out.push_back(g.edge(id).b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void FailureSet::check_against(const Graph& g) const {
    for (EdgeId id : ids_) {
        if (!g.valid_edge(id)) {
            throw std::out_of_range("unknown edge id " + std::to_string(id));
        }
    }
}

std::ostream& operator<<(std::ostream& os, const FailureSet& d) {
    os << '{';
    bool first = true;
    for (EdgeId id : d) {
        os << (first ? "" : ",") << id;
        first = false;
    }
    return os << '}';
}

}  // namespace ftdo
