#include "mp/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace mp {

namespace {

void check_simple(int v, const std::vector<std::pair<NodeId, NodeId>>& edges) {
    if (v < 2)
        throw GraphError(GraphError::Kind::too_small, "graph must have at least 2 nodes");
    std::set<std::pair<NodeId, NodeId>> seen;
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= v || b >= v)
            throw GraphError(GraphError::Kind::malformed_line,
                             "edge endpoint out of range: " + std::to_string(a) + " " + std::to_string(b));
        if (a == b)
            throw GraphError(GraphError::Kind::self_edge, "self-edge at node " + std::to_string(a));
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw GraphError(GraphError::Kind::duplicate_edge,
                             "duplicate edge " + std::to_string(key.first) + "-" + std::to_string(key.second));
    }
}

} // namespace

Graph::Graph(int node_count, std::vector<std::pair<NodeId, NodeId>> input_edges) {
    check_simple(node_count, input_edges);

    // Input-label adjacency, sorted so BFS breaks ties by ascending input label.
    std::vector<std::vector<NodeId>> adj(node_count);
    for (auto [a, b] : input_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& list : adj)
        std::sort(list.begin(), list.end());

    std::vector<NodeId> new_id(node_count, -1);
    std::vector<NodeId> order_of_appearance;
    order_of_appearance.reserve(node_count);
    std::deque<NodeId> queue{0};
    new_id[0] = 0;
    order_of_appearance.push_back(0);
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (NodeId nb : adj[u]) {
            if (new_id[nb] < 0) {
                new_id[nb] = static_cast<NodeId>(order_of_appearance.size());
                order_of_appearance.push_back(nb);
                queue.push_back(nb);
            }
        }
    }
    if (static_cast<int>(order_of_appearance.size()) != node_count)
        throw GraphError(GraphError::Kind::disconnected, "graph is not connected");

    node_count_ = node_count;
    original_labels_ = order_of_appearance;
    adjacency_.assign(node_count, {});
    by_order_.assign(node_count, {});

    std::vector<std::vector<NodeId>> canon_adj(node_count);
    for (auto [a, b] : input_edges) {
        canon_adj[new_id[a]].push_back(new_id[b]);
        canon_adj[new_id[b]].push_back(new_id[a]);
    }
    for (auto& list : canon_adj)
        std::sort(list.begin(), list.end());

    // Edge order by first appearance in the canonical scan.
    std::vector<std::vector<EdgeOrder>> order_between(node_count);
    for (NodeId v = 0; v < node_count; ++v)
        order_between[v].assign(canon_adj[v].size(), 0);
    edges_.reserve(input_edges.size());
    for (NodeId v = 0; v < node_count; ++v) {
        for (std::size_t i = 0; i < canon_adj[v].size(); ++i) {
            NodeId w = canon_adj[v][i];
            if (order_between[v][i] != 0)
                continue;
            edges_.emplace_back(v, w);
            EdgeOrder e = static_cast<EdgeOrder>(edges_.size());
            order_between[v][i] = e;
            auto it = std::lower_bound(canon_adj[w].begin(), canon_adj[w].end(), v);
            order_between[w][it - canon_adj[w].begin()] = e;
        }
    }

    for (NodeId v = 0; v < node_count; ++v) {
        adjacency_[v].reserve(canon_adj[v].size());
        for (std::size_t i = 0; i < canon_adj[v].size(); ++i)
            adjacency_[v].push_back({order_between[v][i], canon_adj[v][i]});
        by_order_[v] = adjacency_[v];
        std::sort(by_order_[v].begin(), by_order_[v].end(),
                  [](const Incidence& a, const Incidence& b) { return a.order < b.order; });
    }
}

EdgeOrder Graph::edge_between(NodeId u, NodeId v) const {
    const auto& list = adjacency_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const Incidence& inc, NodeId x) { return inc.neighbor < x; });
    if (it != list.end() && it->neighbor == v)
        return it->order;
    return 0;
}

const char* family_name(GraphFamily f) {
    switch (f) {
    case GraphFamily::path: return "path";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::star: return "star";
    case GraphFamily::complete: return "complete";
    case GraphFamily::wheel: return "wheel";
    case GraphFamily::prism: return "prism";
    case GraphFamily::ladder: return "ladder";
    case GraphFamily::helm: return "helm";
    case GraphFamily::sunlet: return "sunlet";
    case GraphFamily::web: return "web";
    case GraphFamily::gear: return "gear";
    case GraphFamily::book: return "book";
    case GraphFamily::antiprism: return "antiprism";
    }
    return "?";
}

GraphFamily family_from_name(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(GraphFamily::antiprism); ++i) {
        auto f = static_cast<GraphFamily>(i);
        if (name == family_name(f))
            return f;
    }
    throw GraphError(GraphError::Kind::bad_family, "unknown graph family: " + name);
}

int family_min_size(GraphFamily f) {
    switch (f) {
    case GraphFamily::path:
    case GraphFamily::star: return 2;
    case GraphFamily::cycle:
    case GraphFamily::complete:
    case GraphFamily::sunlet:
    case GraphFamily::helm:
    case GraphFamily::gear:
    case GraphFamily::web:
    case GraphFamily::prism:
    case GraphFamily::antiprism: return 3;
    case GraphFamily::ladder: return 2;
    case GraphFamily::book: return 1;
    case GraphFamily::wheel: return 4;
    }
    return 2;
}

Graph generate_family(GraphFamily family, int n) {
    if (n < family_min_size(family))
        throw GraphError(GraphError::Kind::too_small,
                         std::string(family_name(family)) + " requires n >= " +
                             std::to_string(family_min_size(family)));

    std::vector<std::pair<NodeId, NodeId>> e;
    int v = 0;
    switch (family) {
    case GraphFamily::path:
        v = n;
        for (int i = 0; i + 1 < n; ++i)
            e.emplace_back(i, i + 1);
        break;
    case GraphFamily::cycle:
        v = n;
        for (int i = 0; i < n; ++i)
            e.emplace_back(i, (i + 1) % n);
        break;
    case GraphFamily::star:
        v = n;
        for (int i = 1; i < n; ++i)
            e.emplace_back(0, i);
        break;
    case GraphFamily::complete:
        v = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                e.emplace_back(i, j);
        break;
    case GraphFamily::wheel:
        // n nodes total: rim cycle 0..n-2, hub last. Hub-last labeling
        // reproduces the published per-type splits.
        v = n;
        for (int i = 0; i < n - 1; ++i) {
            e.emplace_back(i, (i + 1) % (n - 1));
            e.emplace_back(n - 1, i);
        }
        break;
    case GraphFamily::prism:
        v = 2 * n;
        for (int i = 0; i < n; ++i) {
            e.emplace_back(i, (i + 1) % n);
            e.emplace_back(n + i, n + (i + 1) % n);
            e.emplace_back(i, n + i);
        }
        break;
    case GraphFamily::ladder:
        // Rung-major labels: rung i is (2i, 2i+1).
        v = 2 * n;
        for (int i = 0; i < n; ++i) {
            e.emplace_back(2 * i, 2 * i + 1);
            if (i + 1 < n) {
                e.emplace_back(2 * i, 2 * i + 2);
                e.emplace_back(2 * i + 1, 2 * i + 3);
            }
        }
        break;
    case GraphFamily::helm:
        // Wheel with hub 0 and cycle 1..n, pendant n+i on cycle node i.
        v = 2 * n + 1;
        for (int i = 1; i <= n; ++i) {
            e.emplace_back(0, i);
            e.emplace_back(i, i == n ? 1 : i + 1);
            e.emplace_back(i, n + i);
        }
        break;
    case GraphFamily::sunlet:
        v = 2 * n;
        for (int i = 0; i < n; ++i) {
            e.emplace_back(i, (i + 1) % n);
            e.emplace_back(i, n + i);
        }
        break;
    case GraphFamily::web:
        // Prism on 2n nodes plus a pendant on each node of the second cycle.
        v = 3 * n;
        for (int i = 0; i < n; ++i) {
            e.emplace_back(i, (i + 1) % n);
            e.emplace_back(n + i, n + (i + 1) % n);
            e.emplace_back(i, n + i);
            e.emplace_back(n + i, 2 * n + i);
        }
        break;
    case GraphFamily::gear:
        // Hub 0, rim cycle 1..2n, hub joined to odd rim nodes.
        v = 2 * n + 1;
        for (int i = 1; i <= 2 * n; ++i)
            e.emplace_back(i, i == 2 * n ? 1 : i + 1);
        for (int i = 1; i <= 2 * n; i += 2)
            e.emplace_back(0, i);
        break;
    case GraphFamily::book:
        // Stacked book: star S_{n+1} x K_2, page-major labels. Centers 0 and
        // 1, page i on (2i, 2i+1).
        v = 2 * n + 2;
        e.emplace_back(0, 1);
        for (int i = 1; i <= n; ++i) {
            e.emplace_back(0, 2 * i);
            e.emplace_back(1, 2 * i + 1);
            e.emplace_back(2 * i, 2 * i + 1);
        }
        break;
    case GraphFamily::antiprism:
        v = 2 * n;
        for (int i = 0; i < n; ++i) {
            e.emplace_back(i, (i + 1) % n);
            e.emplace_back(n + i, n + (i + 1) % n);
            e.emplace_back(i, n + i);
            e.emplace_back(i, n + (i + 1) % n);
        }
        break;
    }
    return Graph(v, std::move(e));
}

Graph generate_erdos_renyi(int v, int e_target, std::uint64_t seed) {
    if (v < 2)
        throw GraphError(GraphError::Kind::too_small, "erdos-renyi requires v >= 2");
    if (e_target < v - 1)
        throw GraphError(GraphError::Kind::too_small, "erdos-renyi requires e >= v-1");

    double p = 2.0 * e_target / (static_cast<double>(v) * (v - 1));
    if (p > 1.0)
        p = 1.0;

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::pair<NodeId, NodeId>> edges;
        for (int i = 0; i < v; ++i) {
            for (int j = i + 1; j < v; ++j) {
                // Raw-threshold draw: bit-reproducible across platforms.
                double x = (rng() >> 11) * 0x1.0p-53;
                if (x < p)
                    edges.emplace_back(i, j);
            }
        }
        if (static_cast<int>(edges.size()) < v - 1)
            continue;
        try {
            return Graph(v, std::move(edges));
        } catch (const GraphError& err) {
            if (err.kind() != GraphError::Kind::disconnected)
                throw;
        }
    }
    throw GraphError(GraphError::Kind::generation_failed,
                     "erdos-renyi retry budget exhausted (p too small for connectivity)");
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int v = -1, e = -1;
    std::vector<std::pair<NodeId, NodeId>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#')
            continue;
        std::istringstream ls(line);
        long a, b;
        if (!(ls >> a >> b))
            throw GraphError(GraphError::Kind::malformed_line,
                             "line " + std::to_string(line_no) + ": expected two integers");
        std::string rest;
        if (ls >> rest)
            throw GraphError(GraphError::Kind::malformed_line,
                             "line " + std::to_string(line_no) + ": trailing tokens");
        if (v < 0) {
            v = static_cast<int>(a);
            e = static_cast<int>(b);
            if (v < 2)
                throw GraphError(GraphError::Kind::too_small, "header declares V < 2");
            if (e < 0)
                throw GraphError(GraphError::Kind::malformed_line, "header declares E < 0");
        } else {
            edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
        }
    }
    if (v < 0)
        throw GraphError(GraphError::Kind::malformed_line, "missing \"V E\" header line");
    if (static_cast<int>(edges.size()) != e)
        throw GraphError(GraphError::Kind::malformed_line,
                         "header declares " + std::to_string(e) + " edges, found " +
                             std::to_string(edges.size()));
    return Graph(v, std::move(edges));
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (EdgeOrder e = 1; e <= g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (a > b)
            std::swap(a, b);
        out << a << ' ' << b << '\n';
    }
}

} // namespace mp
