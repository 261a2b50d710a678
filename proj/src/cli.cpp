#include "mp/cli.hpp"

#include "mp/analytics.hpp"
#include "mp/enumerator.hpp"
#include "mp/graph.hpp"
#include "mp/known_counts.hpp"
#include "mp/oracle.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

namespace mp {

namespace {

struct InputSpec {
    std::string file;
    std::string family;
    int n = 0;
    std::vector<int> er; // v, e
    std::uint64_t seed = 1;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--file", file, "edge-list file ('-' for stdin)");
        cmd->add_option("--family", family, "graph family name");
        cmd->add_option("--n", n, "family size parameter");
        cmd->add_option("--er", er, "Erdos-Renyi generator: V E")->expected(2);
        cmd->add_option("--seed", seed, "generator seed");
    }

    std::string describe() const {
        if (!file.empty())
            return file;
        if (!family.empty())
            return family + "-" + std::to_string(n);
        if (!er.empty())
            return "er-" + std::to_string(er[0]) + "-" + std::to_string(er[1]) + "-s" +
                   std::to_string(seed);
        return "?";
    }

    Graph load() const {
        int sources = (!file.empty()) + (!family.empty()) + (!er.empty());
        if (sources != 1)
            throw GraphError(GraphError::Kind::malformed_line,
                             "exactly one of --file/--family/--er is required");
        if (!file.empty()) {
            if (file == "-")
                return parse_edge_list(std::cin);
            std::ifstream in(file);
            if (!in)
                throw GraphError(GraphError::Kind::malformed_line, "cannot open " + file);
            return parse_edge_list(in);
        }
        if (!family.empty())
            return generate_family(family_from_name(family), n);
        return generate_erdos_renyi(er[0], er[1], seed);
    }
};

std::uint64_t default_guard() {
    if (const char* env = std::getenv("MP_MAX_TREES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
    }
    return 100000000ULL;
}

std::vector<NodeId> parse_id_list(const std::string& text) {
    std::vector<NodeId> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(std::stoi(item));
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

int cmd_enumerate(const InputSpec& input, const std::string& out_path, bool suppress_events,
                  std::uint64_t max_trees, std::ostream& out) {
    Graph g = input.load();
    std::ofstream file_out;
    std::ostream* dest = &out;
    if (!out_path.empty() && out_path != "-") {
        file_out.open(out_path);
        if (!file_out)
            throw GraphError(GraphError::Kind::malformed_line, "cannot open " + out_path);
        dest = &file_out;
    }
    EnumerateOptions opts;
    opts.max_trees = max_trees;
    EnumerationSummary summary;
    if (suppress_events) {
        summary = count_only(g, opts);
    } else {
        StreamSink sink(*dest);
        summary = enumerate(g, &sink, opts);
    }
    write_summary_line(*dest, summary);
    return 0;
}

int cmd_verify(const InputSpec& input, bool brute, bool structs, std::uint64_t max_trees,
               std::ostream& out) {
    Graph g = input.load();
    bool failed = false;
    auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
        out << name << ' ' << (ok ? "PASS" : "FAIL");
        if (!detail.empty())
            out << "  " << detail;
        out << '\n';
        if (!ok)
            failed = true;
    };

    EnumerateOptions opts;
    opts.max_trees = max_trees;
    opts.check_invariants = true;
    if (structs) {
        opts.verify_structures_every = 1;
        opts.verify_attributes_every = 1;
    }

    std::set<EdgeSet> collected;
    bool duplicates = false;
    class CollectSink : public EventSink {
    public:
        CollectSink(std::set<EdgeSet>* sets, bool* dup) : sets_(sets), dup_(dup) {}
        void on_root(const SpanningTreeState& st, const std::vector<EdgeOrder>& edges) override {
            (void)st;
            sets_->insert(edges);
        }
        void on_child(const SpanningTreeState& st, const ChildInfo&) override {
            if (!sets_->insert(st.tree_edges_sorted()).second)
                *dup_ = true;
        }

    private:
        std::set<EdgeSet>* sets_;
        bool* dup_;
    };

    EnumerationSummary summary;
    if (brute) {
        CollectSink sink(&collected, &duplicates);
        summary = enumerate(g, &sink, opts);
    } else {
        summary = enumerate(g, nullptr, opts);
    }
    if (structs)
        report("structures-scratch-rebuild", true,
               "checked after every promotion (" + std::to_string(summary.total) + " trees)");

    std::uint64_t kirchhoff = kirchhoff_count(g);
    report("kirchhoff-total", summary.total == kirchhoff,
           "enumerated " + std::to_string(summary.total) + " determinant " +
               std::to_string(kirchhoff));

    if (brute) {
        auto truth = brute_force_enumerate(g);
        bool equal = !duplicates && collected == truth;
        report("brute-force-set-equality", equal,
               "enumerated " + std::to_string(collected.size()) + " brute " +
                   std::to_string(truth.size()) + (duplicates ? " (duplicates!)" : ""));
    }

    if (!input.family.empty()) {
        auto row = known_family_row(family_from_name(input.family), input.n);
        if (row) {
            if (summary.total != row->total) {
                report("published-total", false,
                       "expected " + std::to_string(row->total));
            } else if (summary.type1 != row->type1) {
                // Ordering-dependent finding: totals match, split differs.
                out << "published-type-split DIFFERS  type1=" << summary.type1 << " published "
                    << row->type1 << " (totals match; canonical-ordering artifact)\n";
            } else {
                report("published-type-split", true,
                       "type1=" + std::to_string(summary.type1));
            }
        }
    }

    if (failed)
        throw VerificationError("verification mismatch");
    return 0;
}

int cmd_report(const InputSpec& input, const std::string& range, std::ostream& out) {
    out << summary_tsv_header() << '\n';
    EnumerateOptions opts;
    opts.max_trees = default_guard();
    auto emit_row = [&](const std::string& name, const Graph& g) {
        try {
            auto summary = count_only(g, opts);
            out << summarize_run(name, g, summary) << '\n';
        } catch (const std::exception& e) {
            out << name << "\tERROR\t" << e.what() << '\n';
        }
    };
    if (!input.family.empty() && !range.empty()) {
        auto [lo, hi] = parse_range(range);
        for (int n = lo; n <= hi; ++n) {
            try {
                Graph g = generate_family(family_from_name(input.family), n);
                emit_row(input.family + "-" + std::to_string(n), g);
            } catch (const std::exception& e) {
                out << input.family << "-" << n << "\tERROR\t" << e.what() << '\n';
            }
        }
        return 0;
    }
    Graph g = input.load();
    emit_row(input.describe(), g);
    return 0;
}

int cmd_current(const InputSpec& input, NodeId source, NodeId sink_node, std::uint64_t max_trees,
                std::ostream& out) {
    Graph g = input.load();
    auto current = electrical_current(g, source, sink_node, max_trees);
    out << "edge\tu\tv\tcurrent\n";
    char buf[128];
    for (EdgeOrder e = 1; e <= g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (a > b)
            std::swap(a, b);
        std::snprintf(buf, sizeof(buf), "%d\t%d\t%d\t%.12g", e, a, b, current.per_edge[e - 1]);
        out << buf << '\n';
    }
    return 0;
}

int cmd_routing(const InputSpec& input, const std::vector<int>& grid,
                const std::string& robots_text, const std::string& targets_text, int r_count,
                int t_count, std::uint64_t seed, std::uint64_t max_trees, std::ostream& out) {
    Graph g = grid.empty() ? input.load() : make_grid_graph(grid[0], grid[1]);
    PathMarkers markers;
    if (!robots_text.empty() || !targets_text.empty()) {
        markers.robots = parse_id_list(robots_text);
        markers.targets = parse_id_list(targets_text);
    } else {
        // Seeded random placement without replacement per marker kind.
        std::mt19937_64 rng(seed);
        auto draw = [&](int count) {
            std::vector<NodeId> all(g.node_count());
            std::iota(all.begin(), all.end(), 0);
            std::vector<NodeId> picked;
            for (int i = 0; i < count && !all.empty(); ++i) {
                std::size_t k = static_cast<std::size_t>(rng() % all.size());
                picked.push_back(all[k]);
                all.erase(all.begin() + k);
            }
            return picked;
        };
        markers.robots = draw(r_count);
        markers.targets = draw(t_count);
    }
    auto rep = routing_experiment(g, markers, max_trees);
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "robots=%zu targets=%zu nodes=%d\ntrees=%llu disconnected=%llu mean=%.4f "
                  "expected_mp=%.2f expected_random=%.2f\n",
                  markers.robots.size(), markers.targets.size(), g.node_count(),
                  static_cast<unsigned long long>(rep.total_trees),
                  static_cast<unsigned long long>(rep.disconnected_total), rep.per_tree_mean,
                  rep.expected_mp, rep.expected_random);
    out << buf;
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"spanning-tree enumeration via minimal-partitioning edge promotion"};
    app.require_subcommand(1);

    InputSpec in_enum, in_verify, in_report, in_current, in_routing;
    std::string out_path = "-";
    bool count_only_flag = false;
    std::uint64_t max_trees = default_guard();
    bool brute = false, structs = false;
    std::string range;
    std::vector<int> source_pair{0, 1};
    std::vector<int> grid;
    std::string robots_text, targets_text;
    int r_count = 0, t_count = 0;

    auto* c_enum = app.add_subcommand("enumerate", "emit the tree event stream");
    in_enum.add_options(c_enum);
    c_enum->add_option("--out", out_path, "output path ('-' = stdout)");
    c_enum->add_flag("--count-only", count_only_flag, "suppress events, print the summary line");
    c_enum->add_option("--max-trees", max_trees, "tree-count guard");

    auto* c_verify = app.add_subcommand("verify", "cross-check against the oracles");
    in_verify.add_options(c_verify);
    c_verify->add_flag("--brute", brute, "compare edge sets against brute force");
    c_verify->add_flag("--structs", structs, "scratch-rebuild structures after every promotion");
    c_verify->add_option("--max-trees", max_trees, "tree-count guard");

    auto* c_report = app.add_subcommand("report", "TSV summary rows");
    in_report.add_options(c_report);
    c_report->add_option("--range", range, "family size range A..B (with --family)");
    bool report_current = false;
    c_report->add_flag("--current", report_current, "emit electrical-current TSV instead");
    c_report->add_option("--source", source_pair, "source and sink node (with --current)")
        ->expected(2);

    auto* c_current = app.add_subcommand("current", "electrical current per edge");
    in_current.add_options(c_current);
    c_current->add_option("--source", source_pair, "source and sink node")->expected(2);
    c_current->add_option("--max-trees", max_trees, "tree-count guard");

    auto* c_routing = app.add_subcommand("routing", "disconnected-path accounting");
    in_routing.add_options(c_routing);
    c_routing->add_option("--grid", grid, "open grid: ROWS COLS")->expected(2);
    c_routing->add_option("--robots", robots_text, "robot nodes, comma separated");
    c_routing->add_option("--targets", targets_text, "target nodes, comma separated");
    c_routing->add_option("--r", r_count, "random robot count (with --seed)");
    c_routing->add_option("--t", t_count, "random target count (with --seed)");
    c_routing->add_option("--max-trees", max_trees, "tree-count guard");

    std::vector<const char*> argv;
    argv.push_back("mp");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (c_enum->parsed())
            return cmd_enumerate(in_enum, out_path, count_only_flag, max_trees, out);
        if (c_verify->parsed())
            return cmd_verify(in_verify, brute, structs, max_trees, out);
        if (c_report->parsed()) {
            if (source_pair.size() != 2)
                source_pair = {0, 1};
            if (report_current)
                return cmd_current(in_report, source_pair[0], source_pair[1], max_trees, out);
            return cmd_report(in_report, range, out);
        }
        if (c_current->parsed()) {
            if (source_pair.size() != 2)
                source_pair = {0, 1};
            return cmd_current(in_current, source_pair[0], source_pair[1], max_trees, out);
        }
        if (c_routing->parsed())
            return cmd_routing(in_routing, grid, robots_text, targets_text, r_count, t_count,
                               in_routing.seed, max_trees, out);
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const VerificationError& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace mp
