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

#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ftdo/generator.hpp"
#include "ftdo/graph.hpp"
#include "ftdo/oracle.hpp"
#include "ftdo/oracle_file.hpp"
#include "ftdo/query.hpp"
#include "ftdo/random.hpp"
#include "ftdo/reference.hpp"

namespace ftdo::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open graph file " + path);
    }
    return parse_graph(in);
}

unsigned default_threads() {
    return std::max(1u, std::thread::hardware_concurrency());
}

EdgeId parse_failure(const Graph& g, const std::string& text) {
    auto dash = text.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == text.size()) {
        throw UsageError("failure '" + text + "' is not of the form a-b");
    }
    Vertex a = 0;
    Vertex b = 0;
    try {
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        a = std::stoi(text.substr(0, dash), &used_a);
        b = std::stoi(text.substr(dash + 1), &used_b);
        if (used_a != dash || used_b != text.size() - dash - 1) {
            throw std::invalid_argument(text);
        }
    } catch (const std::exception&) {
        throw UsageError("failure '" + text + "' is not of the form a-b");
    }
    auto id = g.find_edge(a, b);
    if (!id) {
        throw UsageError("no edge " + text + " in the graph");
    }
    return *id;
}

struct BuildArgs {
    std::string graph;
    std::size_t d = 1;
    std::uint64_t seed = 1;
    std::string out;
    unsigned threads = default_threads();
};

int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err) {
    Graph g = read_graph_file(args.graph);
    BuildOptions options;
    options.threads = args.threads;
    options.progress = [&err](std::uint64_t done, std::uint64_t total) {
        err << "progress " << done << "/" << total << " failure sets\n";
    };
    auto start = std::chrono::steady_clock::now();
    Oracle oracle = Oracle::build(std::move(g), args.d, args.seed, options);
    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    save_oracle(oracle, args.out);
    out << "n " << oracle.graph.num_vertices() << "\n"
        << "m " << oracle.graph.num_edges() << "\n"
        << "d " << oracle.budget() << "\n"
        << "seed " << oracle.tiebreak.seed << "\n"
        << "failure sets " << failure_set_count(oracle.graph.num_edges(), oracle.budget()) << "\n"
        << "entries " << oracle.tables.entry_count() << "\n";
    err << "build time " << std::fixed << std::setprecision(3) << elapsed << " ms\n";
    return kExitOk;
}

struct QueryArgs {
    std::string oracle;
    Vertex s = 0;
    Vertex t = 0;
    std::vector<std::string> failures;
    bool json = false;
};

int cmd_query(const QueryArgs& args, std::ostream& out) {
    Oracle oracle = load_oracle(args.oracle);
    if (!oracle.graph.valid_vertex(args.s) || !oracle.graph.valid_vertex(args.t)) {
        throw UsageError("vertex out of range 0.." + std::to_string(oracle.graph.num_vertices() - 1));
    }
    std::vector<EdgeId> failures;
    for (const auto& text : args.failures) {
        failures.push_back(parse_failure(oracle.graph, text));
    }
    QueryEngine engine(oracle.graph, oracle.index, oracle.tables);
    QueryResult result = engine.query(args.s, args.t, failures);
    if (args.json) {
        nlohmann::json j;
        j["s"] = args.s;
        j["t"] = args.t;
        j["reachable"] = result.distance.has_value();
        j["distance"] = result.distance ? nlohmann::json(*result.distance) : nlohmann::json(nullptr);
        j["lookups"] = result.stats.lookups;
        j["hitset_calls"] = result.stats.hitset_calls;
        j["depth"] = result.stats.max_depth;
        out << j.dump() << "\n";
    } else if (result.distance) {
        out << *result.distance << "\n";
    } else {
        out << "UNREACHABLE\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string graph;
    std::size_t d = 1;
    bool exhaustive = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    bool json = false;
    unsigned threads = default_threads();
};

nlohmann::json report_json(const VerifyReport& r) {
    nlohmann::json j;
    j["passed"] = r.passed();
    j["instances"] = r.instances;
    j["mismatches"] = r.mismatches;
    j["rank_violations"] = r.rank_violations;
    j["rank_drop_violations"] = r.recursion_violations;
    j["depth_violations"] = r.depth_violations;
    j["hitset_calls"] = r.hitset_calls;
    j["contract_a_violations"] = r.contract_a_violations;
    j["contract_b_violations"] = r.contract_b_violations;
    j["contract_c_violations"] = r.contract_c_violations;
    j["unsafe_bounds"] = r.unsafe_bounds;
    j["internal_errors"] = r.internal_errors;
    j["max_rank"] = r.max_rank;
    j["max_depth"] = r.max_depth;
    j["max_hitset_size"] = r.max_hitset_size;
    j["hitset_bound"] = r.hitset_bound;
    j["max_lookups_per_query"] = r.max_lookups_per_query;
    j["max_lookups_per_hitset"] = r.max_lookups_per_hitset;
    j["first_failure"] = r.first_failure ? nlohmann::json(*r.first_failure) : nlohmann::json(nullptr);
    return j;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    Graph g = read_graph_file(args.graph);
    BuildOptions build;
    build.threads = args.threads;
    Oracle oracle = Oracle::build(std::move(g), args.d, args.seed, build);
    VerifyOptions options;
    options.mode = args.samples > 0 ? VerifyMode::kSampled : VerifyMode::kExhaustive;
    options.samples = args.samples;
    options.seed = args.seed;
    VerifyReport report = verify_instance(oracle, options);
    if (args.json) {
        out << report_json(report).dump() << "\n";
    } else {
        out << "mode                  " << (options.mode == VerifyMode::kExhaustive ? "exhaustive" : "sampled") << "\n"
            << "d                     " << args.d << "\n"
            << format_report(report);
    }
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

struct GenArgs {
    std::string model = "gnm";
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t wmax = 32;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
    if (args.model != "gnm") {
        throw UsageError("unknown model " + args.model);
    }
    Graph g;
    try {
        g = generate_gnm(args.n, args.m, args.wmax, args.seed);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::ostringstream text;
    text << "# gnm n=" << args.n << " m=" << args.m << " wmax=" << args.wmax << " seed=" << args.seed << "\n"
         << emit_graph(g);
    if (args.out.empty() || args.out == "-") {
        out << text.str();
    } else {
        std::ofstream file(args.out, std::ios::trunc);
        if (!file) {
            throw UsageError("cannot write " + args.out);
        }
        file << text.str();
    }
    return kExitOk;
}

struct BenchArgs {
    std::string graph;
    std::size_t dmin = 1;
    std::size_t dmax = 2;
    std::uint64_t queries = 100;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
    if (k > m) {
        return 0;
    }
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r = r * (m - i) / (i + 1);
    }
    return r;
}

int cmd_bench(const BenchArgs& args, std::ostream& out) {
    if (args.dmin < 1 || args.dmax < args.dmin) {
        throw UsageError("need 1 <= dmin <= dmax");
    }
    Graph g = read_graph_file(args.graph);
    const std::size_t n = g.num_vertices();
    const std::size_t m = g.num_edges();
    out << "graph n=" << n << " m=" << m << " queries=" << args.queries << " seed=" << args.seed << "\n";
    out << std::left << std::setw(4) << "d" << std::setw(10) << "C(m,d)" << std::setw(12) << "build_ms"
        << std::setw(12) << "time_ratio" << std::setw(10) << "C_ratio" << std::setw(10) << "entries" << std::setw(10)
        << "4n^4" << std::setw(12) << "file_bytes" << std::setw(12) << "lookups_avg" << std::setw(12)
        << "lookups_max" << std::setw(8) << "H_avg" << std::setw(8) << "H_max" << "H_bound\n";
    double prev_ms = 0;
    std::uint64_t prev_c = 0;
    for (std::size_t d = args.dmin; d <= args.dmax; ++d) {
        BuildOptions build;
        build.threads = args.threads;
        auto start = std::chrono::steady_clock::now();
        Oracle oracle = Oracle::build(g, d, args.seed, build);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const std::size_t file_bytes = serialize_oracle(oracle).size();

        QueryEngine engine(oracle.graph, oracle.index, oracle.tables);
        std::uint64_t h_total = 0;
        std::uint64_t h_calls = 0;
        std::size_t h_max = 0;
        engine.set_observer([&](Vertex, Vertex, const FailureSet&, const HitSetOutcome& hs) {
            h_total += hs.H.size();
            ++h_calls;
            h_max = std::max(h_max, hs.H.size());
        });
        Rng rng(args.seed);
        std::uint64_t lookups_total = 0;
        std::size_t lookups_max = 0;
        const std::size_t k_max = std::min(d, m);
        std::vector<EdgeId> ids(m);
        for (std::size_t i = 0; i < m; ++i) {
            ids[i] = static_cast<EdgeId>(i);
        }
        for (std::uint64_t q = 0; q < args.queries; ++q) {
            auto u = static_cast<Vertex>(uniform_below(rng, n));
            auto v = static_cast<Vertex>(uniform_below(rng, n));
            std::size_t k = k_max == 0 ? 0 : static_cast<std::size_t>(uniform_in(rng, 1, k_max));
            for (std::size_t i = 0; i < k; ++i) {
                std::swap(ids[i], ids[i + static_cast<std::size_t>(uniform_below(rng, m - i))]);
            }
            QueryResult r = engine.query(u, v, std::span<const EdgeId>(ids.data(), k));
            lookups_total += r.stats.lookups;
            lookups_max = std::max(lookups_max, r.stats.lookups);
        }
        const std::uint64_t c = binomial(m, d);
        std::ostringstream time_ratio;
        std::ostringstream c_ratio;
        if (prev_c > 0) {
            time_ratio << std::fixed << std::setprecision(2) << ms / prev_ms;
            c_ratio << std::fixed << std::setprecision(2) << static_cast<double>(c) / static_cast<double>(prev_c);
        } else {
            time_ratio << "-";
            c_ratio << "-";
        }
        const double q = static_cast<double>(std::max<std::uint64_t>(1, args.queries));
        std::ostringstream lookups_avg;
        lookups_avg << std::fixed << std::setprecision(2) << static_cast<double>(lookups_total) / q;
        std::ostringstream h_avg;
        h_avg << std::fixed << std::setprecision(2)
              << (h_calls ? static_cast<double>(h_total) / static_cast<double>(h_calls) : 0.0);
        std::ostringstream build_ms;
        build_ms << std::fixed << std::setprecision(2) << ms;
        out << std::setw(4) << d << std::setw(10) << c << std::setw(12) << build_ms.str() << std::setw(12)
            << time_ratio.str() << std::setw(10) << c_ratio.str() << std::setw(10) << oracle.tables.entry_count()
            << std::setw(10) << table_entry_count(n) << std::setw(12) << file_bytes << std::setw(12)
            << lookups_avg.str() << std::setw(12) << lookups_max << std::setw(8) << h_avg.str() << std::setw(8)
            << h_max << hitset_size_bound(d) << "\n";
        prev_ms = ms;
        prev_c = c;
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact distance oracle under edge failures"};
    app.require_subcommand(1);

    BuildArgs build;
    auto* build_cmd = app.add_subcommand("build", "preprocess a graph into an oracle file");
    build_cmd->add_option("-g,--graph", build.graph, "graph text file")->required();
    build_cmd->add_option("-d", build.d, "failure budget")->required()->check(CLI::PositiveNumber);
    build_cmd->add_option("--seed", build.seed, "tie-break seed");
    build_cmd->add_option("-o,--out", build.out, "oracle file to write")->required();
    build_cmd->add_option("--threads", build.threads, "worker threads")->check(CLI::PositiveNumber);

    QueryArgs query;
    auto* query_cmd = app.add_subcommand("query", "exact distance between s and t avoiding failed edges");
    query_cmd->add_option("-o,--oracle", query.oracle, "oracle file")->required();
    query_cmd->add_option("-s", query.s, "source vertex")->required();
    query_cmd->add_option("-t", query.t, "target vertex")->required();
    query_cmd->add_option("--fail", query.failures, "failed edge as a-b (repeatable)");
    query_cmd->add_flag("--json", query.json, "machine-readable output");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "check the oracle against brute force");
    verify_cmd->add_option("-g,--graph", verify.graph, "graph text file")->required();
    verify_cmd->add_option("-d", verify.d, "failure budget")->required()->check(CLI::PositiveNumber);
    auto* exhaustive = verify_cmd->add_flag("--exhaustive", verify.exhaustive, "every pair and failure set (default)");
    auto* samples = verify_cmd->add_option("--samples", verify.samples, "random instances instead")
                        ->check(CLI::PositiveNumber);
    exhaustive->excludes(samples);
    verify_cmd->add_option("--seed", verify.seed, "tie-break and sampling seed");
    verify_cmd->add_option("--threads", verify.threads, "build threads")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", verify.json, "machine-readable summary");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "random connected graph");
    gen_cmd->add_option("--model", gen.model, "graph model")->check(CLI::IsMember({"gnm"}));
    gen_cmd->add_option("-n", gen.n, "vertices")->required();
    gen_cmd->add_option("-m", gen.m, "edges")->required();
    gen_cmd->add_option("--wmax", gen.wmax, "largest weight");
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("-o,--out", gen.out, "output file (stdout if omitted)");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "build and query cost across budgets");
    bench_cmd->add_option("-g,--graph", bench.graph, "graph text file")->required();
    bench_cmd->add_option("--dmin", bench.dmin, "smallest budget");
    bench_cmd->add_option("--dmax", bench.dmax, "largest budget");
    bench_cmd->add_option("--queries", bench.queries, "random queries per budget");
    bench_cmd->add_option("--seed", bench.seed, "seed");
    bench_cmd->add_option("--threads", bench.threads, "build threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*build_cmd) {
            return cmd_build(build, out, err);
        }
        if (*query_cmd) {
            return cmd_query(query, out);
        }
        if (*verify_cmd) {
            return cmd_verify(verify, out);
        }
        if (*gen_cmd) {
            return cmd_gen(gen, out);
        }
        if (*bench_cmd) {
            return cmd_bench(bench, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace ftdo::cli
