#include <doctest.h>

#include "nuclique/errors.hpp"
#include "nuclique/graph.hpp"
#include "nuclique/rng.hpp"

using namespace nuclique;

namespace {

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("vertex set basics") {
    VertexSet s({3, 1, 2}, 5);
    CHECK(s.members() == std::vector<int>{1, 2, 3});
    CHECK(s.size() == 3);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(0));

    const Eigen::VectorXd chi = s.characteristic_vector();
    CHECK(chi.size() == 5);
    CHECK(chi.sum() == 3.0);
    for (int v : s.members()) CHECK(chi(v) == 1.0);

    CHECK_THROWS_AS(VertexSet({1, 1}, 3), InvalidInput);
    CHECK_THROWS_AS(VertexSet({5}, 3), InvalidInput);
    CHECK_THROWS_AS(VertexSet({-1}, 3), InvalidInput);
}

TEST_CASE("graph construction and validation") {
    Graph g(4, {{0, 1}, {2, 1}});
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidInput);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidInput);
    CHECK_THROWS_AS(g.has_edge(0, 7), InvalidInput);
}

TEST_CASE("adjacency matrix round trip") {
    Rng rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(18));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.bernoulli(0.4)) edges.emplace_back(i, j);
        Graph g(n, edges);
        const Eigen::MatrixXd a = g.adjacency_matrix();
        CHECK(a == a.transpose());
        std::vector<std::pair<int, int>> back;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (a(i, j) == 1.0) back.emplace_back(i, j);
        CHECK(back == g.edges());
    }
}

TEST_CASE("clique degree to planted set") {
    const VertexSet vstar({0, 1, 2}, 5);
    CHECK(clique_degree_to_planted(complete_graph(5), vstar, 4) == 3);
    CHECK(clique_degree_to_planted(Graph(5, {}), vstar, 4) == 0);
    CHECK(clique_degree_to_planted(cycle_graph(5), vstar, 4) == 1);

    CHECK_THROWS_AS(clique_degree_to_planted(complete_graph(5), vstar, 1), InvalidInput);
    CHECK_THROWS_AS(clique_degree_to_planted(complete_graph(5), vstar, 9), InvalidInput);
}

TEST_CASE("biclique degrees") {
    std::vector<std::pair<int, int>> k33;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) k33.emplace_back(i, j);
    const BipartiteGraph complete(3, 3, k33);
    const VertexSet ustar({0, 1}, 3), vstar({0, 1}, 3);

    auto d = biclique_degrees(complete, ustar, vstar);
    CHECK(d.p[2] == 2);
    CHECK(d.q[2] == 2);

    std::vector<std::pair<int, int>> planted_only;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) planted_only.emplace_back(i, j);
    d = biclique_degrees(BipartiteGraph(3, 3, planted_only), ustar, vstar);
    CHECK(d.p[2] == 0);
    CHECK(d.q[2] == 0);

    auto with_extra = planted_only;
    with_extra.emplace_back(2, 0);
    d = biclique_degrees(BipartiteGraph(3, 3, with_extra), ustar, vstar);
    CHECK(d.p[2] == 1);
    CHECK(d.q[2] == 0);
}

TEST_CASE("clique and biclique predicates") {
    CHECK(is_clique(complete_graph(4), VertexSet({0, 1, 2, 3}, 4)));
    CHECK_FALSE(is_clique(cycle_graph(4), VertexSet({0, 1, 2}, 4)));
    CHECK(is_clique(cycle_graph(4), VertexSet({2}, 4)));
    CHECK(is_clique(cycle_graph(4), VertexSet({}, 4)));

    const BipartiteGraph g(2, 2, {{0, 0}, {0, 1}, {1, 0}});
    CHECK(is_biclique(g, VertexSet({0}, 2), VertexSet({0, 1}, 2)));
    CHECK_FALSE(is_biclique(g, VertexSet({0, 1}, 2), VertexSet({0, 1}, 2)));
}

TEST_CASE("planted-graph v1 round trip is byte exact") {
    PlantedInstance inst;
    inst.kind = ProblemKind::Clique;
    inst.graph = Graph(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
    inst.planted_left = VertexSet({0, 1, 2}, 5);
    inst.planted_right = VertexSet({}, 0);

    const std::string text = format_instance(inst);
    CHECK(text ==
          "# planted-graph v1\n"
          "type clique\n"
          "nodes 5\n"
          "planted 0 1 2\n"
          "edge 0 1\n"
          "edge 0 2\n"
          "edge 1 2\n"
          "edge 3 4\n");
    const PlantedInstance back = parse_instance(text);
    CHECK(format_instance(back) == text);
    CHECK(back.planted_left.members() == inst.planted_left.members());
}

TEST_CASE("planted-graph v1 biclique and empty planted lines") {
    PlantedInstance inst;
    inst.kind = ProblemKind::Biclique;
    inst.bigraph = BipartiteGraph(2, 3, {{0, 0}, {1, 2}});
    inst.planted_left = VertexSet({}, 2);
    inst.planted_right = VertexSet({}, 3);

    const std::string text = format_instance(inst);
    CHECK(text ==
          "# planted-graph v1\n"
          "type biclique\n"
          "nodes 2 3\n"
          "planted-left\n"
          "planted-right\n"
          "edge 0 0\n"
          "edge 1 2\n");
    const PlantedInstance back = parse_instance(text);
    CHECK(back.planted_left.empty());
    CHECK(format_instance(back) == text);
}

TEST_CASE("planted-graph v1 rejects malformed input") {
    CHECK_THROWS_AS(parse_instance("# planted-graph v2\n"), InvalidInput);
    CHECK_THROWS_AS(parse_instance("# planted-graph v1\ntype tree\n"), InvalidInput);
    CHECK_THROWS_AS(
        parse_instance("# planted-graph v1\ntype clique\nnodes 3\nplanted\nvertex 0 1\n"),
        InvalidInput);
    CHECK_THROWS_AS(
        parse_instance("# planted-graph v1\r\ntype clique\r\nnodes 3\r\nplanted\r\n"),
        InvalidInput);
    // planted pair 0-1 is not an edge
    CHECK_THROWS_AS(parse_instance("# planted-graph v1\ntype clique\nnodes 3\nplanted 0 1\n"),
                    InvalidInput);
    CHECK_THROWS_AS(
        parse_instance("# planted-graph v1\ntype clique\nnodes 3\nplanted 0 1\nedge 0 1\nedge 0 1\n"),
        InvalidInput);
}
