#ifndef MP_GRAPH_HPP
#define MP_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mp {

using NodeId = int;
using EdgeOrder = int; // 1..E, 0 is the NIL marker

class GraphError : public std::runtime_error {
public:
    enum class Kind {
        malformed_line,
        self_edge,
        duplicate_edge,
        disconnected,
        too_small,
        bad_family,
        generation_failed,
    };

    GraphError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Canonical undirected simple graph. Nodes are re-indexed by BFS order from
// input node 0 (ties by ascending input label); edge orders 1..E are assigned
// by first appearance scanning nodes 0..V-1 and each sorted adjacency list.
// Consequence used throughout: the minimum-order edge incident to any node
// v > 0 joins v to its smallest-id neighbor, which is a lower id.
class Graph {
public:
    struct Incidence {
        EdgeOrder order;
        NodeId neighbor;
    };

    // Builds the canonical form of the given simple connected graph.
    Graph(int node_count, std::vector<std::pair<NodeId, NodeId>> input_edges);

    int node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<NodeId, NodeId> endpoints(EdgeOrder e) const { return edges_[e - 1]; }
    NodeId other_end(EdgeOrder e, NodeId v) const {
        auto [a, b] = edges_[e - 1];
        return a == v ? b : a;
    }

    // Sorted by neighbor id.
    const std::vector<Incidence>& adjacency(NodeId v) const { return adjacency_[v]; }
    // Sorted by edge order (lower neighbors ascending, then upper neighbors ascending).
    const std::vector<Incidence>& incident_by_order(NodeId v) const { return by_order_[v]; }

    int degree(NodeId v) const { return static_cast<int>(adjacency_[v].size()); }
    EdgeOrder min_order_edge(NodeId v) const { return by_order_[v].front().order; }
    EdgeOrder max_order_edge(NodeId v) const { return by_order_[v].back().order; }
    EdgeOrder edge_between(NodeId u, NodeId v) const; // 0 if absent

    NodeId original_label(NodeId v) const { return original_labels_[v]; }

private:
    int node_count_ = 0;
    std::vector<std::pair<NodeId, NodeId>> edges_; // index = order - 1, endpoints canonical
    std::vector<std::vector<Incidence>> adjacency_;
    std::vector<std::vector<Incidence>> by_order_;
    std::vector<NodeId> original_labels_;
};

enum class GraphFamily {
    path,
    cycle,
    star,
    complete,
    wheel,
    prism,
    ladder,
    helm,
    sunlet,
    web,
    gear,
    book,
    antiprism,
};

const char* family_name(GraphFamily f);
GraphFamily family_from_name(const std::string& name);
int family_min_size(GraphFamily f);

Graph generate_family(GraphFamily family, int n);

// Each candidate edge kept independently with p = 2*e_target/(V*(V-1)),
// clamped to 1; resampled until connected (up to 1000 retries).
Graph generate_erdos_renyi(int v, int e_target, std::uint64_t seed);

Graph parse_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

} // namespace mp

#endif
