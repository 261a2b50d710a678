#include "mp/graph.hpp"
#include "mp/known_counts.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace mp;

namespace {

Graph from_text(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

} // namespace

TEST_CASE("parse_edge_list accepts the documented format") {
    Graph g = from_text("# triangle\n3 3\n0 1\n1 2\n2 0\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);

    Graph path = from_text("4 3\n0 1\n1 2\n2 3\n");
    CHECK(path.node_count() == 4);
    CHECK(path.edge_count() == 3);
}

TEST_CASE("parse_edge_list rejects bad input with distinct diagnostics") {
    auto kind_of = [](const std::string& text) {
        try {
            std::istringstream in(text);
            parse_edge_list(in);
        } catch (const GraphError& e) {
            return e.kind();
        }
        FAIL("expected a GraphError");
        return GraphError::Kind::malformed_line;
    };
    CHECK(kind_of("3 2\n0 1\nnope nope\n") == GraphError::Kind::malformed_line);
    CHECK(kind_of("3 3\n0 1\n1 2\n2 2\n") == GraphError::Kind::self_edge);
    CHECK(kind_of("3 3\n0 1\n1 2\n1 2\n") == GraphError::Kind::duplicate_edge);
    CHECK(kind_of("4 2\n0 1\n2 3\n") == GraphError::Kind::disconnected);
    CHECK(kind_of("1 0\n") == GraphError::Kind::too_small);
    CHECK(kind_of("3 1\n0 1\n1 2\n") == GraphError::Kind::malformed_line); // edge count lie
}

TEST_CASE("canonicalization orders edges by first appearance") {
    // Already canonical path stays put.
    Graph path = from_text("4 3\n0 1\n1 2\n2 3\n");
    for (NodeId v = 0; v < 4; ++v)
        CHECK(path.original_label(v) == v);
    CHECK(path.endpoints(1) == std::make_pair(0, 1));
    CHECK(path.endpoints(2) == std::make_pair(1, 2));
    CHECK(path.endpoints(3) == std::make_pair(2, 3));
}

TEST_CASE("star with center labeled 3 relabels the center to id 1") {
    Graph star = from_text("5 4\n3 0\n3 1\n3 2\n3 4\n");
    CHECK(star.original_label(0) == 0);
    CHECK(star.original_label(1) == 3); // BFS from input node 0 reaches the center first
    CHECK(star.degree(1) == 4);
}

TEST_CASE("canonicalization is idempotent") {
    Graph g = from_text("6 9\n5 2\n2 0\n0 4\n4 5\n1 3\n3 5\n1 0\n2 4\n3 0\n");
    std::ostringstream first;
    write_edge_list(g, first);
    std::istringstream again(first.str());
    Graph g2 = parse_edge_list(again);
    std::ostringstream second;
    write_edge_list(g2, second);
    CHECK(first.str() == second.str());
}

TEST_CASE("minimum-order incident edge of every node points downward") {
    auto check_graph = [](const Graph& g) {
        for (NodeId v = 1; v < g.node_count(); ++v) {
            EdgeOrder e = g.min_order_edge(v);
            CHECK(g.other_end(e, v) < v);
        }
        // Orders are exactly 1..E and distinct by construction of endpoints().
        for (EdgeOrder e = 1; e <= g.edge_count(); ++e) {
            auto [a, b] = g.endpoints(e);
            CHECK(a != b);
        }
    };
    check_graph(generate_family(GraphFamily::wheel, 7));
    check_graph(generate_family(GraphFamily::web, 5));
    check_graph(generate_erdos_renyi(9, 16, 42));
}

TEST_CASE("family generators match the published node and edge counts") {
    for (const auto& row : known_family_rows()) {
        Graph g = generate_family(row.family, row.n);
        INFO(family_name(row.family) << "-" << row.n);
        CHECK(g.node_count() == row.nodes);
        CHECK(g.edge_count() == row.edges);
    }
}

TEST_CASE("family size minimums are enforced") {
    CHECK_THROWS_AS(generate_family(GraphFamily::wheel, 3), GraphError);
    CHECK_THROWS_AS(generate_family(GraphFamily::cycle, 2), GraphError);
}

TEST_CASE("erdos-renyi generator") {
    SECTION("clamps p to the complete graph") {
        Graph g = generate_erdos_renyi(5, 10, 7);
        CHECK(g.edge_count() == 10);
    }
    SECTION("is deterministic for a fixed seed") {
        Graph a = generate_erdos_renyi(10, 20, 1234);
        Graph b = generate_erdos_renyi(10, 20, 1234);
        std::ostringstream sa, sb;
        write_edge_list(a, sa);
        write_edge_list(b, sb);
        CHECK(sa.str() == sb.str());
        CHECK(a.node_count() == 10);
        CHECK(a.edge_count() >= 9);
    }
    SECTION("rejects e below the connectivity floor") {
        CHECK_THROWS_AS(generate_erdos_renyi(5, 3, 1), GraphError);
    }
}

TEST_CASE("incident_by_order lists lower neighbors before upper neighbors") {
    Graph g = generate_family(GraphFamily::wheel, 6);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        bool seen_upper = false;
        EdgeOrder prev = 0;
        for (const auto& inc : g.incident_by_order(v)) {
            CHECK(inc.order > prev);
            prev = inc.order;
            if (inc.neighbor > v)
                seen_upper = true;
            else
                CHECK(!seen_upper);
        }
    }
}
