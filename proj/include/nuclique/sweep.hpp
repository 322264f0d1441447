#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nuclique/graph.hpp"
#include "nuclique/solver.hpp"

namespace nuclique::sweep {

/// Grid description for a recovery sweep. Cells are the cartesian
/// product of N values, clique sizes (given directly via n_values or as
/// multipliers c of sqrt(N)), and p values (random mode) or r values
/// (adversarial mode). Biclique sizing uses M = ceil(y*N), m = ceil(z*n).
struct SweepConfig {
    ProblemKind problem = ProblemKind::Clique;
    EdgeModel mode = EdgeModel::Random;
    std::vector<int> N_values;
    std::vector<int> n_values;
    std::vector<double> c_values;
    std::vector<double> p_values;
    std::vector<long long> r_values;
    double alpha = 0.5;
    double beta = 0.5;
    double y = 1.0;
    double z = 1.0;
    int trials_per_cell = 1;
    std::uint64_t base_seed = 0;
    int workers = 1;
    solver::SolverConfig solver;
};

struct SweepRow {
    ProblemKind problem = ProblemKind::Clique;
    int N = 0;
    int M = 0;
    int n = 0;
    int m = 0;
    double p = 0.0;
    long long r = 0;
    double alpha = 0.0;
    double beta = 0.0;
    double c = 0.0;
    int trials = 0;
    double recovered_fraction = 0.0;
    double cert_strict_fraction = 0.0;
    double mean_W_spectral = 0.0;  // over trials whose witness could be built; NaN if none
    double mean_iterations = 0.0;
    double mean_runtime_ms = 0.0;
    /// Trials where strict verification passed but the solver missed the
    /// planted set. Uniqueness makes this impossible, so it is tracked
    /// (outside the CSV schema) and asserted zero in tests.
    int strict_without_recovery = 0;
};

/// One row per grid cell, in deterministic grid order. Trials run on a
/// bounded worker pool; per-trial failures are recorded in the row, not
/// raised. Every column except mean_runtime_ms is a pure function of
/// (config, base_seed).
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

struct AlphaEstimate {
    bool attained = false;
    double c = 0.0;
    std::vector<SweepRow> rows;
};

/// Smallest c in the grid whose recovery fraction is at least 0.95 in
/// every N cell. Requires random mode with a c grid.
AlphaEstimate estimate_alpha(const SweepConfig& cfg);

std::string rows_to_csv(const std::vector<SweepRow>& rows);

}  // namespace nuclique::sweep
