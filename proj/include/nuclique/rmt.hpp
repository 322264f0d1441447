#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "nuclique/graph.hpp"

namespace nuclique::rmt {

/// Two-point mean-zero distribution: 1 with probability p, -p/(1-p)
/// otherwise. Its variance is p/(1-p).
struct OmegaParams {
    double p;
    double sigma_squared;

    explicit OmegaParams(double p_value);
};

struct TrialReport {
    int trials = 0;
    std::vector<double> samples;
    double bound = 0.0;
    int violation_count = 0;
    std::uint64_t seed = 0;
};

Eigen::MatrixXd sample_omega(int rows, int cols, const OmegaParams& params,
                             std::uint64_t seed);

/// Symmetric sample: the lower triangle (diagonal included) is i.i.d.
/// and mirrored above.
Eigen::MatrixXd sample_omega_symmetric(int n, const OmegaParams& params, std::uint64_t seed);

/// Replace every non-one entry of column j by -n_j/(n - n_j), where n_j
/// counts the ones, which forces exact zero column sums. Throws
/// SaturatedColumn when some column is all ones.
Eigen::MatrixXd recenter_columns(const Eigen::MatrixXd& a, int n);

/// Spectral norm of symmetric n x n samples against the bound
/// 3 * sigma * sqrt(n).
TrialReport check_furedi_komlos(int n, double p, int trials, std::uint64_t seed);

/// Spectral norm of ceil(y*n) x n samples, recorded as ||A||/sqrt(n);
/// the report's bound field holds the empirical maximum (the scale
/// constant has no published value).
TrialReport check_geman(int n, double y, double p, int trials, std::uint64_t seed);

/// Multiplicative tail bound (e^delta / (1+delta)^(1+delta))^(p*k).
double chernoff_bound(long long k, double p, double delta);

/// Two-sided bound 2*exp(-a^2/p) for deviations a*sqrt(k); requires
/// a in (0, p*sqrt(k)).
double chernoff_sqrt_bound(long long k, double p, double a);

/// ||A - recentered(A)||_F^2 / N over trials of n x N samples. Saturated
/// trials count as violations (statistic recorded as +infinity); the
/// bound field holds the largest finite sample.
TrialReport check_recentering_bound(int n, int N, double p, int trials, std::uint64_t seed);

/// Five-way split of a random-model instance's witness matrix:
/// an i.i.d. part plus corrections on the planted block, the outside
/// diagonal (clique only), and the two planted-by-outside blocks.
/// Parts sum to the witness entrywise; auxiliary coins are drawn from a
/// seed derived from the instance seed.
struct WitnessSplit {
    ProblemKind kind = ProblemKind::Clique;
    Eigen::MatrixXd w;  // the full witness the parts reconstruct
    std::array<Eigen::MatrixXd, 5> parts;
    std::array<double, 5> spectral{};
    std::array<double, 5> frobenius{};
};

WitnessSplit decompose_random_W(const PlantedInstance& inst, double gamma);

}  // namespace nuclique::rmt
