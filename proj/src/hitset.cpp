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

#include "ftdo/hitset.hpp"

#include <algorithm>
#include <iterator>

namespace ftdo {

namespace {

void sort_unique(std::vector<Vertex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

void HitSetOutcome::fold(const HitSetOutcome& other) {
    L = std::min(L, other.L);
    std::vector<Vertex> merged;
    merged.reserve(H.size() + other.H.size());
    std::set_union(H.begin(), H.end(), other.H.begin(), other.H.end(), std::back_inserter(merged));
    H = std::move(merged);
    lookups += other.lookups;
}

InducedKeyTree HitSetEngine::build_induced_key_tree(Vertex root, const FailureSet& failures) const {
    InducedKeyTree tree;
    tree.root = root;
    auto by_euler = [&](Vertex a, Vertex b) { return index_.tin(root, a) < index_.tin(root, b); };

    std::vector<Vertex> marked;
    for (EdgeId e : failures) {
        auto [a, b] = index_.endpoints(e);
        marked.push_back(a);
        marked.push_back(b);
    }
    sort_unique(marked);
    std::sort(marked.begin(), marked.end(), by_euler);

    // branching vertices of T_induced are exactly the LCAs of Euler-adjacent marks
    std::vector<Vertex> keys = marked;
    for (std::size_t i = 1; i < marked.size(); ++i) {
        keys.push_back(index_.lca(root, marked[i - 1], marked[i]));
    }
    sort_unique(keys);
    std::sort(keys.begin(), keys.end(), by_euler);

    std::vector<Vertex> stack;
    for (Vertex k : keys) {
        while (!stack.empty() && !index_.is_ancestor(root, stack.back(), k)) {
            stack.pop_back();
        }
        tree.edges.push_back({stack.empty() ? InducedKeyTree::kAuxRoot : stack.back(), k});
        stack.push_back(k);
    }
    tree.keys = std::move(keys);
    return tree;
}

TableEntry HitSetEngine::guarded_lookup(const TableKey& key, const FailureSet& failures, HitSetOutcome& out) const {
    if (!constraint_holds(index_, failures, key)) {
        throw std::logic_error("table lookup whose constraint the query failures violate");
    }
    ++out.lookups;
    return tables_.lookup(key);
}

void HitSetEngine::add_hit(Vertex u, Vertex v, Vertex w, const FailureSet& failures, HitSetOutcome& out) const {
    if (index_.path_intersects(u, w, failures) && index_.path_intersects(v, w, failures)) {
        auto it = std::lower_bound(out.H.begin(), out.H.end(), w);
        if (it == out.H.end() || *it != w) {
            out.H.insert(it, w);
        }
    }
}

HitSetOutcome HitSetEngine::case_one(Vertex u, Vertex v, Vertex u_helper, Vertex v_helper,
                                     const FailureSet& failures) const {
    if (!index_.is_clean(u, u_helper, failures, Side::kSource) || !index_.is_clean(v, v_helper, failures, Side::kSink)) {
        throw std::logic_error("case one needs a u-clean and a v-clean helper");
    }
    HitSetOutcome out;
    TableEntry entry = guarded_lookup({u, v, u_helper, v_helper, true, true}, failures, out);
    out.L = entry.l_star;
    for (EdgeId e : entry.d_star) {
        auto [a, b] = index_.endpoints(e);
        add_hit(u, v, std::min(a, b), failures, out);
        add_hit(u, v, std::max(a, b), failures, out);
    }
    return out;
}

HitSetOutcome HitSetEngine::case_two(Vertex u, Vertex v, Vertex helper, const FailureSet& failures,
                                     Direction direction) const {
    const Vertex search_root = direction == Direction::kForward ? u : v;
    return case_two_with_tree(u, v, helper, failures, direction, build_induced_key_tree(search_root, failures));
}

HitSetOutcome HitSetEngine::case_two_with_tree(Vertex u, Vertex v, Vertex helper, const FailureSet& failures,
                                               Direction direction, const InducedKeyTree& tree) const {
    const bool forward = direction == Direction::kForward;
    // `near` is the side searched for a clean vertex, `far` owns the known helper
    const Vertex near = forward ? u : v;
    const Vertex far = forward ? v : u;
    if (!index_.is_clean(far, helper, failures, forward ? Side::kSink : Side::kSource)) {
        throw std::logic_error("case two needs a clean helper on the known side");
    }

    HitSetOutcome out;
    std::vector<Vertex> helpers;
    for (const auto& [p, c] : tree.edges) {
        if (index_.path_intersects(near, c, failures)) {
            continue;
        }
        TableKey key = forward ? TableKey{u, v, c, helper, false, true} : TableKey{u, v, helper, c, true, false};
        TableEntry entry = guarded_lookup(key, failures, out);
        out.L = std::min(out.L, entry.l_star);
        for (EdgeId e : entry.d_star) {
            if (failures.contains(e)) {
                continue;
            }
            auto [x, y] = index_.endpoints(e);
            if (!index_.path_intersects(far, x, failures) || !index_.path_intersects(far, y, failures)) {
                continue;
            }
            if (index_.path_intersects(near, x, failures)) {
                add_hit(u, v, x, failures, out);
                continue;
            }
            if (index_.path_intersects(near, y, failures)) {
                add_hit(u, v, y, failures, out);
                continue;
            }
            Vertex child = index_.tree_child(near, e);
            if (child == kNoVertex) {
                continue;
            }
            if (!index_.subtree_touches(near, child, failures)) {
                helpers.push_back(child);
            }
        }
    }
    sort_unique(helpers);
    for (Vertex h : helpers) {
        out.fold(forward ? case_one(u, v, h, helper, failures) : case_one(u, v, helper, h, failures));
    }
    return out;
}

HitSetOutcome HitSetEngine::case_three(Vertex u, Vertex v, const FailureSet& failures) const {
    if (failures.empty() || !index_.path_intersects(u, v, failures)) {
        throw std::logic_error("case three needs failures on pi(u, v)");
    }
    const InducedKeyTree tree_u = build_induced_key_tree(u, failures);
    const InducedKeyTree tree_v = build_induced_key_tree(v, failures);

    HitSetOutcome out;
    std::vector<Vertex> helpers_u;
    std::vector<Vertex> helpers_v;
    for (const auto& edge_u : tree_u.edges) {
        const Vertex cu = edge_u.child;
        if (index_.path_intersects(u, cu, failures)) {
            continue;
        }
        for (const auto& edge_v : tree_v.edges) {
            const Vertex cv = edge_v.child;
            if (index_.path_intersects(v, cv, failures)) {
                continue;
            }
            TableEntry entry = guarded_lookup({u, v, cu, cv, false, false}, failures, out);
            out.L = std::min(out.L, entry.l_star);
            for (EdgeId e : entry.d_star) {
                if (failures.contains(e)) {
                    continue;
                }
                auto [a, b] = index_.endpoints(e);
                for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                    const bool hit_ux = index_.path_intersects(u, x, failures);
                    const bool hit_yv = index_.path_intersects(v, y, failures);
                    if (!hit_ux && !hit_yv) {
                        out.L = std::min(out.L, index_.dist(u, x) + index_.edge_weight(e) + index_.dist(y, v));
                    } else if (hit_ux && hit_yv) {
                        if (index_.path_intersects(v, x, failures)) {
                            add_hit(u, v, x, failures, out);
                        }
                    } else if (!hit_ux) {
                        Vertex child = index_.tree_child(u, e);
                        if (child == kNoVertex) {
                            if (index_.path_intersects(u, y, failures)) {
                                add_hit(u, v, y, failures, out);
                            }
                        } else if (child == y && !index_.subtree_touches(u, y, failures)) {
                            helpers_u.push_back(y);
                        }
                    } else {
                        Vertex child = index_.tree_child(v, e);
                        if (child == kNoVertex) {
                            if (index_.path_intersects(v, x, failures)) {
                                add_hit(u, v, x, failures, out);
                            }
                        } else if (child == x && !index_.subtree_touches(v, x, failures)) {
                            helpers_v.push_back(x);
                        }
                    }
                }
            }
        }
    }
    sort_unique(helpers_u);
    sort_unique(helpers_v);
    for (Vertex h : helpers_v) {
        out.fold(case_two_with_tree(u, v, h, failures, Direction::kForward, tree_u));
    }
    for (Vertex h : helpers_u) {
        out.fold(case_two_with_tree(u, v, h, failures, Direction::kMirrored, tree_v));
    }
    return out;
}

}  // namespace ftdo
