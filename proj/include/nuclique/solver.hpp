#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "nuclique/graph.hpp"

namespace nuclique::solver {

struct SolverConfig {
    int max_iterations = 5000;
    double primal_tolerance = 1e-6;
    double dual_tolerance = 1e-6;
    /// Initial quadratic-coupling weight of the splitting scheme; adapted
    /// by residual balancing as the iteration proceeds.
    double step_parameter = 1.0;
    double rounding_threshold = 0.5;
    /// Replace the converged iterate by the exact characteristic-vector
    /// matrix of the rounded candidate when that matrix is feasible and
    /// has no worse objective.
    bool polish = true;
    /// Record the objective value of every iterate (tests only).
    bool track_merit = false;
};

struct SolverResult {
    ProblemKind kind = ProblemKind::Clique;
    Eigen::MatrixXd X;  // solution of the sum-normalized problem
    bool converged = false;
    int iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double objective = 0.0;       // nuclear norm of X
    double rank_one_gap = 0.0;    // sigma_2 / sigma_1 of X
    bool degenerate = false;      // top singular value not separated; no candidate reported
    VertexSet candidate;          // clique candidate, or biclique left side
    VertexSet candidate_right;    // biclique right side
    std::vector<double> merit_history;
    std::vector<double> primal_history;
    std::vector<double> dual_history;

    /// X rescaled so its largest-magnitude entry is 1.
    Eigen::MatrixXd scaled_to_unit_peak() const;
};

/// Minimize the nuclear norm over matrices supported on the graph's
/// edges plus the diagonal, with total entry sum at least 1, then round
/// the top singular pair to a vertex set and repair it to a clique.
SolverResult solve_clique_relaxation(const Graph& g, const SolverConfig& cfg = {});

/// Same scheme over the bipartite support.
SolverResult solve_biclique_relaxation(const BipartiteGraph& g, const SolverConfig& cfg = {});

namespace detail {
/// The solver's internal proximal maps; they agree with linalg::svt and
/// return the nuclear norm of the result. Exposed for cross-checking.
double svt_symmetric_inplace(const Eigen::MatrixXd& a, double tau, Eigen::MatrixXd& out);
double svt_rectangular_inplace(const Eigen::MatrixXd& a, double tau, Eigen::MatrixXd& out);
double svt_inplace(const Eigen::MatrixXd& a, double tau, bool symmetric, Eigen::MatrixXd& out);
}  // namespace detail

}  // namespace nuclique::solver
