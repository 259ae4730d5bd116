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

#include "ftdo/oracle_tables.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <new>
#include <string>
#include <thread>

#include "dijkstra.hpp"

namespace ftdo {

bool constraint_holds(const ShortestPathIndex& index, std::span<const EdgeId> failures, const TableKey& key) {
    if (index.path_intersects(key.u, key.u_helper, failures) || index.path_intersects(key.v, key.v_helper, failures)) {
        return false;
    }
    if (key.b1 && index.subtree_touches(key.u, key.u_helper, failures)) {
        return false;
    }
    if (key.b2 && index.subtree_touches(key.v, key.v_helper, failures)) {
        return false;
    }
    return true;
}

std::uint64_t table_entry_count(std::size_t n) {
    const std::uint64_t nn = n;
    return 4 * nn * nn * nn * nn;
}

std::uint64_t failure_set_count(std::size_t m, std::size_t d) {
    std::uint64_t total = 0;
    std::uint64_t binom = 1;
    for (std::size_t k = 0; k <= std::min(d, m); ++k) {
        total += binom;
        binom = binom * (m - k) / (k + 1);
    }
    return total;
}

std::size_t OracleTables::slot(const TableKey& key) const {
    const auto n = static_cast<Vertex>(n_);
    for (Vertex x : {key.u, key.v, key.u_helper, key.v_helper}) {
        if (x < 0 || x >= n) {
            throw std::out_of_range("table key vertex " + std::to_string(x) + " out of range");
        }
    }
    std::size_t s = static_cast<std::size_t>(key.u);
    s = s * n_ + static_cast<std::size_t>(key.v);
    s = s * n_ + static_cast<std::size_t>(key.u_helper);
    s = s * n_ + static_cast<std::size_t>(key.v_helper);
    return (s * 2 + (key.b1 ? 1 : 0)) * 2 + (key.b2 ? 1 : 0);
}

TableKey OracleTables::key_at(std::size_t slot) const {
    TableKey key;
    key.b2 = slot % 2;
    slot /= 2;
    key.b1 = slot % 2;
    slot /= 2;
    key.v_helper = static_cast<Vertex>(slot % n_);
    slot /= n_;
    key.u_helper = static_cast<Vertex>(slot % n_);
    slot /= n_;
    key.v = static_cast<Vertex>(slot % n_);
    key.u = static_cast<Vertex>(slot / n_);
    return key;
}

OracleTables OracleTables::from_parts(std::size_t n, std::size_t d, std::vector<std::uint32_t> counts,
                                      std::vector<EdgeId> ids, std::vector<CompositeLength> lens) {
    const std::uint64_t entries = table_entry_count(n);
    if (counts.size() != entries || lens.size() != entries || ids.size() != entries * d) {
        throw TablesError("table parts do not match 4n^4 = " + std::to_string(entries) + " entries");
    }
    OracleTables t;
    t.n_ = n;
    t.d_ = d;
    t.counts_ = std::move(counts);
    t.ids_ = std::move(ids);
    t.lens_ = std::move(lens);
    return t;
}

namespace {

// Per-worker copy of the table; merged at the end.
struct Accumulator {
    std::size_t d;
    std::vector<std::uint32_t> counts;
    std::vector<EdgeId> ids;
    std::vector<CompositeLength> lens;

    std::span<const EdgeId> set_at(std::size_t slot) const { return {ids.data() + slot * d, counts[slot]}; }

    void offer(std::size_t slot, CompositeLength len, std::span<const EdgeId> set) {
        const CompositeLength& cur = lens[slot];
        if (len < cur) {
            return;
        }
        if (len == cur) {
            auto held = set_at(slot);
            if (!std::lexicographical_compare(set.begin(), set.end(), held.begin(), held.end())) {
                return;
            }
        }
        lens[slot] = len;
        counts[slot] = static_cast<std::uint32_t>(set.size());
        std::fill_n(ids.begin() + static_cast<std::ptrdiff_t>(slot * d), d, kNoEdge);
        std::copy(set.begin(), set.end(), ids.begin() + static_cast<std::ptrdiff_t>(slot * d));
    }
};

// Hands out blocks of failure sets in lexicographic order of sorted ids, size by size.
class SubsetSource {
public:
    SubsetSource(std::size_t m, std::size_t d) : m_(m), max_size_(std::min(d, m)) { advance_size(); }

    // Appends up to `count` subsets (flattened with sizes); false once exhausted.
    bool next_block(std::uint64_t count, std::vector<EdgeId>& flat, std::vector<std::size_t>& sizes) {
        flat.clear();
        sizes.clear();
        while (count > 0 && size_ <= max_size_) {
            flat.insert(flat.end(), current_.begin(), current_.end());
            sizes.push_back(current_.size());
            --count;
            if (!step()) {
                ++size_;
                advance_size();
            }
        }
        return !sizes.empty();
    }

private:
    void advance_size() {
        current_.resize(size_);
        for (std::size_t i = 0; i < size_; ++i) {
            current_[i] = static_cast<EdgeId>(i);
        }
    }

    bool step() {
        std::size_t k = current_.size();
        for (std::size_t i = k; i-- > 0;) {
            if (static_cast<std::size_t>(current_[i]) < m_ - k + i) {
                ++current_[i];
                for (std::size_t j = i + 1; j < k; ++j) {
                    current_[j] = current_[j - 1] + 1;
                }
                return true;
            }
        }
        return false;
    }

    std::size_t m_;
    std::size_t max_size_;
    std::size_t size_ = 1;  // the empty set seeds every entry
    std::vector<EdgeId> current_;
};

class Worker {
public:
    Worker(const Graph& g, const ShortestPathIndex& index, Accumulator acc)
        : g_(g), index_(index), n_(g.num_vertices()), acc_(std::move(acc)),
          removed_(g.num_edges(), 0), dist_(n_ * n_), hit_path_(n_ * n_), hit_subtree_(n_ * n_) {}

    void process(std::span<const EdgeId> set) {
        for (EdgeId e : set) {
            removed_[static_cast<std::size_t>(e)] = 1;
        }
        const auto& w = index_.edge_weights();
        for (std::size_t s = 0; s < n_; ++s) {
            composite_dijkstra(g_, w, removed_, static_cast<Vertex>(s), std::span(dist_.data() + s * n_, n_));
        }
        for (EdgeId e : set) {
            removed_[static_cast<std::size_t>(e)] = 0;
        }
        for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t x = 0; x < n_; ++x) {
                hit_path_[r * n_ + x] = index_.path_intersects(static_cast<Vertex>(r), static_cast<Vertex>(x), set);
                hit_subtree_[r * n_ + x] = index_.subtree_touches(static_cast<Vertex>(r), static_cast<Vertex>(x), set);
            }
        }
        for (std::size_t u = 0; u < n_; ++u) {
            for (std::size_t v = 0; v < n_; ++v) {
                const CompositeLength len = dist_[u * n_ + v];
                const std::size_t base_uv = (u * n_ + v) * n_;
                for (std::size_t up = 0; up < n_; ++up) {
                    if (hit_path_[u * n_ + up]) {
                        continue;
                    }
                    const bool u_tight = !hit_subtree_[u * n_ + up];
                    const std::size_t base = (base_uv + up) * n_;
                    for (std::size_t vp = 0; vp < n_; ++vp) {
                        if (hit_path_[v * n_ + vp]) {
                            continue;
                        }
                        const bool v_tight = !hit_subtree_[v * n_ + vp];
                        const std::size_t s = (base + vp) * 4;
                        acc_.offer(s, len, set);
                        if (v_tight) {
                            acc_.offer(s + 1, len, set);
                        }
                        if (u_tight) {
                            acc_.offer(s + 2, len, set);
                            if (v_tight) {
                                acc_.offer(s + 3, len, set);
                            }
                        }
                    }
                }
            }
        }
    }

    Accumulator& accumulator() { return acc_; }

private:
    const Graph& g_;
    const ShortestPathIndex& index_;
    std::size_t n_;
    Accumulator acc_;
    std::vector<char> removed_;
    std::vector<CompositeLength> dist_;
    std::vector<char> hit_path_;
    std::vector<char> hit_subtree_;
};

}  // namespace

OracleTables build_tables(const Graph& g, const ShortestPathIndex& index, std::size_t d, const BuildOptions& options) {
    if (d < 1) {
        throw std::invalid_argument("failure budget d must be >= 1");
    }
    const std::size_t n = g.num_vertices();
    const std::uint64_t entries = table_entry_count(n);
    const std::uint64_t total_sets = failure_set_count(g.num_edges(), d);

    Accumulator init;
    init.d = d;
    try {
        if (entries > std::numeric_limits<std::size_t>::max() / (sizeof(CompositeLength) + d * sizeof(EdgeId) + 4)) {
            throw std::bad_alloc();
        }
        init.counts.assign(entries, 0);
        init.ids.assign(entries * d, kNoEdge);
        init.lens.resize(entries);
    } catch (const std::bad_alloc&) {
        throw TablesError("cannot allocate " + std::to_string(entries) + " table entries (4n^4 with n = " +
                          std::to_string(n) + ")");
    }
    for (std::size_t s = 0; s < entries; ++s) {
        std::size_t uv = s / (4 * n * n);
        init.lens[s] = index.dist(static_cast<Vertex>(uv / n), static_cast<Vertex>(uv % n));
    }

    const unsigned threads = std::max(1u, options.threads);
    std::vector<Worker> workers;
    workers.reserve(threads);
    try {
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back(g, index, t + 1 == threads ? std::move(init) : init);
        }
    } catch (const std::bad_alloc&) {
        throw TablesError("cannot allocate per-thread copies of " + std::to_string(entries) + " table entries");
    }

    SubsetSource source(g.num_edges(), d);
    std::mutex mutex;
    std::uint64_t done = 1;
    auto run = [&](Worker& worker) {
        std::vector<EdgeId> flat;
        std::vector<std::size_t> sizes;
        for (;;) {
            {
                std::lock_guard lock(mutex);
                if (!source.next_block(std::max<std::uint64_t>(1, options.progress_block), flat, sizes)) {
                    return;
                }
            }
            std::size_t offset = 0;
            for (std::size_t k : sizes) {
                worker.process(std::span<const EdgeId>(flat.data() + offset, k));
                offset += k;
            }
            std::lock_guard lock(mutex);
            done += sizes.size();
            if (options.progress) {
                options.progress(done, total_sets);
            }
        }
    };
    if (threads == 1) {
        run(workers.front());
    } else {
        std::vector<std::thread> pool;
        for (auto& w : workers) {
            pool.emplace_back(run, std::ref(w));
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    Accumulator& merged = workers.front().accumulator();
    for (std::size_t t = 1; t < workers.size(); ++t) {
        const Accumulator& other = workers[t].accumulator();
        for (std::size_t s = 0; s < entries; ++s) {
            merged.offer(s, other.lens[s], other.set_at(s));
        }
    }

    OracleTables tables;
    tables.n_ = n;
    tables.d_ = d;
    tables.counts_ = std::move(merged.counts);
    tables.ids_ = std::move(merged.ids);
    tables.lens_ = std::move(merged.lens);
    return tables;
}

}  // namespace ftdo
