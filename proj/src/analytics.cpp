#include "mp/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mp {

double expected_total_trees(int v, long long e) {
    return std::pow(2.0 * e / (v - 1.0), v - 1) / v;
}

double expected_type1_fraction(int v, long long e) {
    double base = 1.0 - 1.0 / M_E + v / (2.0 * M_E * e);
    double val = std::pow(base, v);
    return std::clamp(val, 0.0, 1.0);
}

std::uint64_t disconnected_paths_markers(const SpanningTreeState& st, const ChildInfo& info,
                                         const std::vector<char>& robot_mask,
                                         const std::vector<char>& target_mask) {
    std::uint64_t r_in = 0, t_in = 0, r_all = 0, t_all = 0;
    for (NodeId n = 0; n < st.node_count(); ++n) {
        r_all += robot_mask[n];
        t_all += target_mask[n];
    }
    st.for_each_in_subtree(info.promoted, [&](NodeId n) {
        r_in += robot_mask[n];
        t_in += target_mask[n];
    });
    return r_in * (t_all - t_in) + t_in * (r_all - r_in);
}

namespace {

struct MarkerCounts {
    std::vector<char> robot, target;
    std::uint64_t robots_total = 0, targets_total = 0;
    std::uint64_t crossing_sum = 0;
};

class RoutingSink : public EventSink {
public:
    RoutingSink(int node_count, const std::vector<PathMarkers>& configs) {
        for (const auto& m : configs) {
            MarkerCounts c;
            c.robot.assign(node_count, 0);
            c.target.assign(node_count, 0);
            for (NodeId r : m.robots) {
                c.robot[r] = 1;
                c.robots_total++;
            }
            for (NodeId t : m.targets) {
                c.target[t] = 1;
                c.targets_total++;
            }
            counts_.push_back(std::move(c));
        }
    }

    void on_child(const SpanningTreeState& st, const ChildInfo& info) override {
        // One subtree walk shared by every marker set.
        std::uint64_t r_in[8] = {}, t_in[8] = {};
        std::size_t k = counts_.size();
        st.for_each_in_subtree(info.promoted, [&](NodeId n) {
            for (std::size_t i = 0; i < k; ++i) {
                r_in[i] += counts_[i].robot[n];
                t_in[i] += counts_[i].target[n];
            }
        });
        for (std::size_t i = 0; i < k; ++i)
            counts_[i].crossing_sum += r_in[i] * (counts_[i].targets_total - t_in[i]) +
                                       t_in[i] * (counts_[i].robots_total - r_in[i]);
    }

    const std::vector<MarkerCounts>& counts() const { return counts_; }

private:
    std::vector<MarkerCounts> counts_;
};

} // namespace

std::vector<RoutingReport> routing_experiment_multi(const Graph& g,
                                                    const std::vector<PathMarkers>& configs,
                                                    std::uint64_t max_trees) {
    if (configs.size() > 8)
        throw std::invalid_argument("routing_experiment_multi: at most 8 marker sets");
    for (const auto& m : configs)
        for (NodeId n : m.robots)
            if (n < 0 || n >= g.node_count())
                throw std::invalid_argument("robot marker outside graph");
    for (const auto& m : configs)
        for (NodeId n : m.targets)
            if (n < 0 || n >= g.node_count())
                throw std::invalid_argument("target marker outside graph");

    RoutingSink sink(g.node_count(), configs);
    EnumerateOptions opts;
    opts.max_trees = max_trees;
    auto summary = enumerate(g, &sink, opts);

    std::vector<RoutingReport> out;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        RoutingReport r;
        r.total_trees = summary.total;
        r.disconnected_total = sink.counts()[i].crossing_sum;
        r.per_tree_mean = summary.total ? static_cast<double>(r.disconnected_total) / summary.total
                                        : 0.0;
        double rt = static_cast<double>(configs[i].robots.size()) * configs[i].targets.size();
        r.expected_mp = 2.0 * rt / g.node_count();
        r.expected_random = rt / 3.0;
        out.push_back(r);
    }
    return out;
}

RoutingReport routing_experiment(const Graph& g, const PathMarkers& markers,
                                 std::uint64_t max_trees) {
    return routing_experiment_multi(g, {markers}, max_trees).front();
}

namespace {

// Accumulates, per edge, the signed number of trees whose source->sink path
// uses it. The path is respliced only when an exchange touches it
// (removed edge on path when applying, re-added edge on path when undoing).
class CurrentSink : public EventSink {
public:
    CurrentSink(const Graph& g, NodeId source, NodeId sink)
        : g_(&g), source_(source), sink_(sink), flow_(g.edge_count(), 0),
          on_path_(g.edge_count() + 1, 0), since_(g.edge_count() + 1, 0) {}

    void on_root(const SpanningTreeState& st, const std::vector<EdgeOrder>&) override {
        recompute_path(st);
        ++trees_;
    }

    void on_child(const SpanningTreeState& st, const ChildInfo& info) override {
        if (on_path_[info.removed])
            recompute_path(st);
        ++trees_;
    }

    void on_undo(const SpanningTreeState& st, const ChildInfo& info) override {
        if (on_path_[info.added])
            recompute_path(st);
    }

    CurrentVector finish() {
        close_all();
        CurrentVector out;
        out.total_trees = trees_;
        out.per_edge.assign(g_->edge_count(), 0.0);
        for (EdgeOrder e = 1; e <= g_->edge_count(); ++e)
            out.per_edge[e - 1] = trees_ ? static_cast<double>(flow_[e - 1]) / trees_ : 0.0;
        return out;
    }

private:
    void close_all() {
        for (EdgeOrder e : path_edges_) {
            flow_[e - 1] += static_cast<long long>(on_path_[e]) *
                            static_cast<long long>(trees_ - since_[e]);
            on_path_[e] = 0;
        }
        path_edges_.clear();
    }

    void recompute_path(const SpanningTreeState& st) {
        close_all();
        // Walk both endpoints to their meeting point, aligned by path length.
        NodeId a = source_, b = sink_;
        std::vector<std::pair<EdgeOrder, int>> up_a, up_b; // (edge, direction sign)
        auto lift = [&](NodeId& x, std::vector<std::pair<EdgeOrder, int>>& chain) {
            EdgeOrder e = st.record(x).edge;
            NodeId p = st.record(x).parent;
            auto [lo, hi] = g_->endpoints(e);
            (void)hi;
            // Sign convention: positive flow = lower id -> higher id.
            chain.push_back({e, lo == x ? +1 : -1}); // traversal x -> p
            x = p;
        };
        while (st.record(a).path_len_to_zero > st.record(b).path_len_to_zero)
            lift(a, up_a);
        while (st.record(b).path_len_to_zero > st.record(a).path_len_to_zero)
            lift(b, up_b);
        while (a != b) {
            lift(a, up_a);
            lift(b, up_b);
        }
        for (auto [e, dir] : up_a) {
            on_path_[e] = static_cast<int8_t>(dir);
            since_[e] = trees_;
            path_edges_.push_back(e);
        }
        // The sink-side chain is traversed against the current direction.
        for (auto [e, dir] : up_b) {
            on_path_[e] = static_cast<int8_t>(-dir);
            since_[e] = trees_;
            path_edges_.push_back(e);
        }
    }

    const Graph* g_;
    NodeId source_, sink_;
    std::vector<long long> flow_;
    std::vector<int8_t> on_path_;
    std::vector<std::uint64_t> since_;
    std::vector<EdgeOrder> path_edges_;
    std::uint64_t trees_ = 0;
};

} // namespace

CurrentVector electrical_current(const Graph& g, NodeId source, NodeId sink,
                                 std::uint64_t max_trees) {
    if (source == sink || source < 0 || sink < 0 || source >= g.node_count() ||
        sink >= g.node_count())
        throw std::invalid_argument("electrical_current: bad source/sink");
    CurrentSink cs(g, source, sink);
    EnumerateOptions opts;
    opts.max_trees = max_trees;
    enumerate(g, &cs, opts);
    return cs.finish();
}

CurrentVector laplacian_current(const Graph& g, NodeId source, NodeId sink) {
    int n = g.node_count();
    // Reduced system: ground the sink node, inject unit current at source.
    std::vector<int> idx(n, -1);
    int m = 0;
    for (NodeId v = 0; v < n; ++v)
        if (v != sink)
            idx[v] = m++;
    std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
    for (NodeId v = 0; v < n; ++v) {
        if (v == sink)
            continue;
        a[idx[v]][idx[v]] = g.degree(v);
        for (const auto& inc : g.adjacency(v))
            if (inc.neighbor != sink)
                a[idx[v]][idx[inc.neighbor]] -= 1.0;
    }
    a[idx[source]][m] = 1.0;

    for (int k = 0; k < m; ++k) {
        int piv = k;
        for (int r = k + 1; r < m; ++r)
            if (std::abs(a[r][k]) > std::abs(a[piv][k]))
                piv = r;
        std::swap(a[k], a[piv]);
        for (int r = k + 1; r < m; ++r) {
            double f = a[r][k] / a[k][k];
            for (int c = k; c <= m; ++c)
                a[r][c] -= f * a[k][c];
        }
    }
    std::vector<double> potential(n, 0.0);
    for (int k = m - 1; k >= 0; --k) {
        double s = a[k][m];
        for (int c = k + 1; c < m; ++c)
            s -= a[k][c] * a[c][m];
        a[k][m] = s / a[k][k];
    }
    for (NodeId v = 0; v < n; ++v)
        potential[v] = v == sink ? 0.0 : a[idx[v]][m];

    CurrentVector out;
    out.per_edge.assign(g.edge_count(), 0.0);
    for (EdgeOrder e = 1; e <= g.edge_count(); ++e) {
        auto [lo, hi] = g.endpoints(e);
        if (lo > hi)
            std::swap(lo, hi);
        out.per_edge[e - 1] = potential[lo] - potential[hi];
    }
    return out;
}

ExpectationReport make_expectation_report(const Graph& g, const EnumerationSummary& s) {
    ExpectationReport r;
    r.expected_total = expected_total_trees(g.node_count(), g.edge_count());
    r.expected_type1_fraction = expected_type1_fraction(g.node_count(), g.edge_count());
    r.actual_total = s.total;
    r.actual_type1_fraction = s.total ? static_cast<double>(s.type1) / s.total : 0.0;
    return r;
}

std::string summary_tsv_header() {
    return "name\tV\tE\ttotal\ttype1\ttype2\tt1_pct\texpected_t1_pct\texpected_total\t"
           "avg_partition\tmax_partition";
}

std::string summarize_run(const std::string& name, const Graph& g, const EnumerationSummary& s) {
    auto rep = make_expectation_report(g, s);
    double avg_partition =
        s.total > 1 ? 1.0 * s.partition_size_sum / (s.total - 1) : 1.0;
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s\t%d\t%d\t%llu\t%llu\t%llu\t%.1f\t%.1f\t%.0f\t%.6f\t%d",
                  name.c_str(), g.node_count(), g.edge_count(),
                  static_cast<unsigned long long>(s.total),
                  static_cast<unsigned long long>(s.type1),
                  static_cast<unsigned long long>(s.type2), 100.0 * rep.actual_type1_fraction,
                  100.0 * rep.expected_type1_fraction, rep.expected_total, avg_partition,
                  s.max_partition);
    return buf;
}

Graph make_grid_graph(int rows, int cols, const std::vector<int>& blocked_cells) {
    std::vector<char> blocked(static_cast<std::size_t>(rows) * cols, 0);
    for (int c : blocked_cells) {
        if (c < 0 || c >= rows * cols)
            throw std::invalid_argument("blocked cell outside grid");
        blocked[c] = 1;
    }
    std::vector<int> label(static_cast<std::size_t>(rows) * cols, -1);
    int next = 0;
    for (int i = 0; i < rows * cols; ++i)
        if (!blocked[i])
            label[i] = next++;
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            int i = r * cols + c;
            if (blocked[i])
                continue;
            if (c + 1 < cols && !blocked[i + 1])
                edges.emplace_back(label[i], label[i + 1]);
            if (r + 1 < rows && !blocked[i + cols])
                edges.emplace_back(label[i], label[i + cols]);
        }
    }
    return Graph(next, std::move(edges));
}

} // namespace mp
