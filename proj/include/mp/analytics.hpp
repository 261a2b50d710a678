#ifndef MP_ANALYTICS_HPP
#define MP_ANALYTICS_HPP

#include "mp/enumerator.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mp {

// Closed-form expectation of the spanning-tree total for a random G(V,E):
// (1/V)(2E/(V-1))^(V-1).
double expected_total_trees(int v, long long e);

// Closed-form expectation of the type-1 fraction, (1 - 1/e + V/(2eE))^V,
// clamped to [0,1]. 0.63 + 0.18 V/E is the same expression with rounded
// constants.
double expected_type1_fraction(int v, long long e);

struct PathMarkers {
    std::vector<NodeId> robots;
    std::vector<NodeId> targets;
};

// Crossing (robot, target) pairs separated by removing the exchanged edge.
std::uint64_t disconnected_paths_markers(const SpanningTreeState& st, const ChildInfo& info,
                                         const std::vector<char>& robot_mask,
                                         const std::vector<char>& target_mask);

inline std::uint64_t disconnected_paths_all_pairs(int v, int s) {
    return static_cast<std::uint64_t>(s) * (v - s);
}

// Smaller side of the cut opened by removing the exchanged edge.
inline int partition_size(const SpanningTreeState& st, const ChildInfo& info) {
    return std::min(info.subtree_size, st.node_count() - info.subtree_size);
}

struct RoutingReport {
    std::uint64_t total_trees = 0;
    std::uint64_t disconnected_total = 0;
    double per_tree_mean = 0.0;
    double expected_mp = 0.0;     // 2rt/V
    double expected_random = 0.0; // rt/3
};

RoutingReport routing_experiment(const Graph& g, const PathMarkers& markers,
                                 std::uint64_t max_trees = 100000000ULL);

// One enumeration shared by several marker sets (same math as running
// routing_experiment once per set).
std::vector<RoutingReport> routing_experiment_multi(const Graph& g,
                                                    const std::vector<PathMarkers>& configs,
                                                    std::uint64_t max_trees = 100000000ULL);

struct CurrentVector {
    std::vector<double> per_edge; // index = order-1, positive = lower id -> higher id
    std::uint64_t total_trees = 0;
};

// Average unit current over all spanning trees: per tree, one unit along the
// unique source->sink tree path. Integer path counts, divided once.
CurrentVector electrical_current(const Graph& g, NodeId source, NodeId sink,
                                 std::uint64_t max_trees = 100000000ULL);

// Independent check: node potentials from the reduced Laplacian (dense solve).
CurrentVector laplacian_current(const Graph& g, NodeId source, NodeId sink);

struct ExpectationReport {
    double expected_total = 0.0;
    double expected_type1_fraction = 0.0;
    std::uint64_t actual_total = 0;
    double actual_type1_fraction = 0.0;
};

ExpectationReport make_expectation_report(const Graph& g, const EnumerationSummary& s);

// TSV row: name V E total type1 type2 t1_pct expected_t1_pct expected_total
// avg_partition max_partition.
std::string summarize_run(const std::string& name, const Graph& g, const EnumerationSummary& s);
std::string summary_tsv_header();

// Four-connected grid with optional blocked cells (row-major labels of the
// open cells are compacted).
Graph make_grid_graph(int rows, int cols, const std::vector<int>& blocked_cells = {});

} // namespace mp

#endif
