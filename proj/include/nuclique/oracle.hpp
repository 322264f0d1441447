#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "nuclique/graph.hpp"

namespace nuclique::oracle {

struct OracleResult {
    VertexSet best_left;          // the clique, or the left side of the biclique
    VertexSet best_right;         // biclique right side; empty universe for cliques
    long long objective = 0;      // clique size, or edge count |left|*|right|
    std::uint64_t nodes_explored = 0;
};

/// Exact maximum clique by branch and bound with greedy-coloring upper
/// bounds; among maximum cliques, returns the lexicographically
/// smallest vertex set. Guarded to N <= 40.
OracleResult max_clique_exact(const Graph& g);

/// Exact maximum-edge biclique by subset enumeration over the smaller
/// side (each subset is paired with its common neighborhood). Guarded
/// to min(M, N) <= 20. Ties break lexicographically on the enumerated
/// side; an edgeless graph yields objective 0 with empty sets.
OracleResult max_edge_biclique_exact(const BipartiteGraph& g);

/// Number of singular values above tol * sigma_max.
int matrix_rank(const Eigen::MatrixXd& a, double tol);

}  // namespace nuclique::oracle
