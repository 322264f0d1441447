#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nuclique {

/// Sorted vertex subset together with its 0/1 characteristic vector.
class VertexSet {
public:
    VertexSet() = default;

    /// `members` need not be sorted; duplicates and out-of-range indices throw.
    VertexSet(std::vector<int> members, int universe_size);

    static VertexSet range(int count, int universe_size);

    const std::vector<int>& members() const { return members_; }
    int universe_size() const { return universe_size_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(int v) const;

    /// Dense 0/1 vector of length universe_size().
    Eigen::VectorXd characteristic_vector() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> members_;
    int universe_size_ = 0;
};

/// Simple undirected graph on vertices 0..N-1. Immutable after
/// construction; no self-loops or duplicate edges are stored.
class Graph {
public:
    Graph(int num_vertices, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return num_vertices_; }
    std::size_t num_edges() const { return edges_.size(); }

    /// Edges with i < j, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int i, int j) const;

    /// Row i as packed 64-bit adjacency words.
    const std::vector<std::uint64_t>& adjacency_row(int i) const { return rows_[i]; }

    /// Dense 0/1 adjacency matrix (zero diagonal), materialized on demand.
    Eigen::MatrixXd adjacency_matrix() const;

private:
    int num_vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

/// Bipartite graph with M left and N right vertices, both 0-based.
class BipartiteGraph {
public:
    BipartiteGraph(int left_count, int right_count,
                   const std::vector<std::pair<int, int>>& edges);

    int left_count() const { return left_count_; }
    int right_count() const { return right_count_; }
    std::size_t num_edges() const { return edges_.size(); }

    /// Edges as (left, right), sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int left, int right) const;

    const std::vector<std::uint64_t>& left_row(int i) const { return left_rows_[i]; }
    const std::vector<std::uint64_t>& right_col(int j) const { return right_cols_[j]; }

    /// Dense 0/1 biadjacency matrix, left_count x right_count.
    Eigen::MatrixXd adjacency_matrix() const;

private:
    int left_count_;
    int right_count_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::uint64_t>> left_rows_;   // indexed by left, bits over right
    std::vector<std::vector<std::uint64_t>> right_cols_;  // indexed by right, bits over left
};

/// Number of planted vertices adjacent to outside vertex j.
/// Requires j outside vstar.
int clique_degree_to_planted(const Graph& g, const VertexSet& vstar, int j);

struct BicliqueDegrees {
    /// p[i] for every left vertex i (entries at planted positions are 0 and unused):
    /// count of edges from i into the planted right set.
    std::vector<int> p;
    /// q[j] analogous for right vertices into the planted left set.
    std::vector<int> q;
};

BicliqueDegrees biclique_degrees(const BipartiteGraph& g, const VertexSet& ustar,
                                 const VertexSet& vstar);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_biclique(const BipartiteGraph& g, const VertexSet& su, const VertexSet& sv);

enum class ProblemKind { Clique, Biclique };
enum class EdgeModel { None, Random, Adversarial };

/// Parameters the generators record on the instances they emit.
struct GenerationParams {
    EdgeModel model = EdgeModel::None;
    double p = 0.0;
    long long r = 0;
    double alpha = 0.0;
    double beta = 0.0;
    double y = 0.0;
    double z = 0.0;
    std::uint64_t seed = 0;
};

/// A graph plus the ground-truth planted set(s) it was built around.
struct PlantedInstance {
    ProblemKind kind = ProblemKind::Clique;
    std::optional<Graph> graph;              // clique instances
    std::optional<BipartiteGraph> bigraph;   // biclique instances
    VertexSet planted_left;                  // V* for clique, U* for biclique
    VertexSet planted_right;                 // V* for biclique, empty for clique
    GenerationParams params;

    const Graph& clique_graph() const;
    const BipartiteGraph& biclique_graph() const;
};

/// planted-graph v1 text format. The writer is byte-exact: LF endings,
/// sorted edges, no trailing whitespace. The reader rejects unknown lines.
PlantedInstance read_instance(const std::string& path);
void write_instance(const std::string& path, const PlantedInstance& inst);
PlantedInstance parse_instance(const std::string& text);
std::string format_instance(const PlantedInstance& inst);

}  // namespace nuclique
