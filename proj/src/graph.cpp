#include "nuclique/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "nuclique/errors.hpp"

namespace nuclique {

namespace {

std::size_t words_for(int bits) { return static_cast<std::size_t>((bits + 63) / 64); }

void set_bit(std::vector<std::uint64_t>& row, int j) {
    row[static_cast<std::size_t>(j) >> 6] |= std::uint64_t{1} << (j & 63);
}

bool test_bit(const std::vector<std::uint64_t>& row, int j) {
    return (row[static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1u;
}

}  // namespace

VertexSet::VertexSet(std::vector<int> members, int universe_size)
    : members_(std::move(members)), universe_size_(universe_size) {
    if (universe_size_ < 0) throw InvalidInput("VertexSet: negative universe size");
    std::sort(members_.begin(), members_.end());
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (members_[k] < 0 || members_[k] >= universe_size_)
            throw InvalidInput("VertexSet: member out of range");
        if (k > 0 && members_[k] == members_[k - 1])
            throw InvalidInput("VertexSet: duplicate member");
    }
}

VertexSet VertexSet::range(int count, int universe_size) {
    std::vector<int> m(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) m[static_cast<std::size_t>(i)] = i;
    return VertexSet(std::move(m), universe_size);
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Eigen::VectorXd VertexSet::characteristic_vector() const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(universe_size_);
    for (int v : members_) x(v) = 1.0;
    return x;
}

Graph::Graph(int num_vertices, const std::vector<std::pair<int, int>>& edges)
    : num_vertices_(num_vertices) {
    if (num_vertices_ < 0) throw InvalidInput("Graph: negative vertex count");
    rows_.assign(static_cast<std::size_t>(num_vertices_),
                 std::vector<std::uint64_t>(words_for(num_vertices_), 0));
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= num_vertices_ || b >= num_vertices_)
            throw InvalidInput("Graph: edge endpoint out of range");
        if (a == b) throw InvalidInput("Graph: self-loop");
        if (a > b) std::swap(a, b);
        if (test_bit(rows_[static_cast<std::size_t>(a)], b))
            throw InvalidInput("Graph: duplicate edge");
        set_bit(rows_[static_cast<std::size_t>(a)], b);
        set_bit(rows_[static_cast<std::size_t>(b)], a);
        edges_.emplace_back(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
}

bool Graph::has_edge(int i, int j) const {
    if (i < 0 || j < 0 || i >= num_vertices_ || j >= num_vertices_)
        throw InvalidInput("Graph::has_edge: index out of range");
    if (i == j) return false;
    return test_bit(rows_[static_cast<std::size_t>(i)], j);
}

Eigen::MatrixXd Graph::adjacency_matrix() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(num_vertices_, num_vertices_);
    for (auto [i, j] : edges_) {
        a(i, j) = 1.0;
        a(j, i) = 1.0;
    }
    return a;
}

BipartiteGraph::BipartiteGraph(int left_count, int right_count,
                               const std::vector<std::pair<int, int>>& edges)
    : left_count_(left_count), right_count_(right_count) {
    if (left_count_ < 0 || right_count_ < 0)
        throw InvalidInput("BipartiteGraph: negative vertex count");
    left_rows_.assign(static_cast<std::size_t>(left_count_),
                      std::vector<std::uint64_t>(words_for(right_count_), 0));
    right_cols_.assign(static_cast<std::size_t>(right_count_),
                       std::vector<std::uint64_t>(words_for(left_count_), 0));
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= left_count_ || v >= right_count_)
            throw InvalidInput("BipartiteGraph: edge endpoint out of range");
        if (test_bit(left_rows_[static_cast<std::size_t>(u)], v))
            throw InvalidInput("BipartiteGraph: duplicate edge");
        set_bit(left_rows_[static_cast<std::size_t>(u)], v);
        set_bit(right_cols_[static_cast<std::size_t>(v)], u);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
}

bool BipartiteGraph::has_edge(int left, int right) const {
    if (left < 0 || right < 0 || left >= left_count_ || right >= right_count_)
        throw InvalidInput("BipartiteGraph::has_edge: index out of range");
    return test_bit(left_rows_[static_cast<std::size_t>(left)], right);
}

Eigen::MatrixXd BipartiteGraph::adjacency_matrix() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(left_count_, right_count_);
    for (auto [u, v] : edges_) a(u, v) = 1.0;
    return a;
}

int clique_degree_to_planted(const Graph& g, const VertexSet& vstar, int j) {
    if (j < 0 || j >= g.num_vertices())
        throw InvalidInput("clique_degree_to_planted: vertex out of range");
    if (vstar.contains(j))
        throw InvalidInput("clique_degree_to_planted: vertex is planted");
    int count = 0;
    for (int i : vstar.members())
        if (g.has_edge(i, j)) ++count;
    return count;
}

BicliqueDegrees biclique_degrees(const BipartiteGraph& g, const VertexSet& ustar,
                                 const VertexSet& vstar) {
    if (ustar.universe_size() != g.left_count() || vstar.universe_size() != g.right_count())
        throw InvalidInput("biclique_degrees: planted sets sized for another graph");
    BicliqueDegrees d;
    d.p.assign(static_cast<std::size_t>(g.left_count()), 0);
    d.q.assign(static_cast<std::size_t>(g.right_count()), 0);
    for (int i = 0; i < g.left_count(); ++i) {
        if (ustar.contains(i)) continue;
        int c = 0;
        for (int j : vstar.members())
            if (g.has_edge(i, j)) ++c;
        d.p[static_cast<std::size_t>(i)] = c;
    }
    for (int j = 0; j < g.right_count(); ++j) {
        if (vstar.contains(j)) continue;
        int c = 0;
        for (int i : ustar.members())
            if (g.has_edge(i, j)) ++c;
        d.q[static_cast<std::size_t>(j)] = c;
    }
    return d;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    const auto& m = s.members();
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b)
            if (!g.has_edge(m[a], m[b])) return false;
    return true;
}

bool is_biclique(const BipartiteGraph& g, const VertexSet& su, const VertexSet& sv) {
    for (int u : su.members())
        for (int v : sv.members())
            if (!g.has_edge(u, v)) return false;
    return true;
}

const Graph& PlantedInstance::clique_graph() const {
    if (!graph) throw InvalidInput("instance does not hold a clique graph");
    return *graph;
}

const BipartiteGraph& PlantedInstance::biclique_graph() const {
    if (!bigraph) throw InvalidInput("instance does not hold a bipartite graph");
    return *bigraph;
}

}  // namespace nuclique
