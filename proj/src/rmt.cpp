#include "nuclique/rmt.hpp"

#include <cmath>
#include <limits>

#include "nuclique/certificate.hpp"
#include "nuclique/errors.hpp"
#include "nuclique/linalg.hpp"
#include "nuclique/rng.hpp"

namespace nuclique::rmt {

namespace {

constexpr double kPowerTol = 1e-8;

// Keeps auxiliary witness-split coins out of phase with generator streams.
constexpr std::uint64_t kAuxSeedSalt = 0x9e3779b97f4a7c15ULL;

double omega_low(double p) { return -p / (1.0 - p); }

}  // namespace

OmegaParams::OmegaParams(double p_value) : p(p_value), sigma_squared(p_value / (1.0 - p_value)) {
    if (!(p > 0.0 && p < 1.0)) throw InvalidInput("OmegaParams: p must be in (0, 1)");
}

Eigen::MatrixXd sample_omega(int rows, int cols, const OmegaParams& params,
                             std::uint64_t seed) {
    if (rows <= 0 || cols <= 0) throw InvalidInput("sample_omega: dimensions must be positive");
    Rng rng(seed);
    const double low = omega_low(params.p);
    Eigen::MatrixXd a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            a(i, j) = rng.bernoulli(params.p) ? 1.0 : low;
    return a;
}

Eigen::MatrixXd sample_omega_symmetric(int n, const OmegaParams& params, std::uint64_t seed) {
    if (n <= 0) throw InvalidInput("sample_omega_symmetric: n must be positive");
    Rng rng(seed);
    const double low = omega_low(params.p);
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double v = rng.bernoulli(params.p) ? 1.0 : low;
            a(i, j) = v;
            a(j, i) = v;
        }
    }
    return a;
}

Eigen::MatrixXd recenter_columns(const Eigen::MatrixXd& a, int n) {
    if (n != a.rows()) throw InvalidInput("recenter_columns: n must equal the row count");
    std::vector<int> saturated;
    Eigen::MatrixXd out = a;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        int ones = 0;
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) == 1.0) ++ones;
        if (ones == n) {
            saturated.push_back(static_cast<int>(j));
            continue;
        }
        const double fill = -static_cast<double>(ones) / (n - ones);
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != 1.0) out(i, j) = fill;
    }
    if (!saturated.empty())
        throw SaturatedColumn("recenter_columns: all-ones column(s)", saturated);
    return out;
}

TrialReport check_furedi_komlos(int n, double p, int trials, std::uint64_t seed) {
    const OmegaParams params(p);
    TrialReport report;
    report.trials = trials;
    report.seed = seed;
    report.bound = 3.0 * std::sqrt(params.sigma_squared) * std::sqrt(static_cast<double>(n));
    for (int t = 0; t < trials; ++t) {
        const Eigen::MatrixXd a = sample_omega_symmetric(n, params, seed + static_cast<std::uint64_t>(t));
        const double stat = linalg::spectral_norm_power(a, kPowerTol);
        report.samples.push_back(stat);
        if (stat > report.bound) ++report.violation_count;
    }
    return report;
}

TrialReport check_geman(int n, double y, double p, int trials, std::uint64_t seed) {
    if (!(y > 0.0)) throw InvalidInput("check_geman: y must be positive");
    const OmegaParams params(p);
    const int rows = static_cast<int>(std::ceil(y * n));
    TrialReport report;
    report.trials = trials;
    report.seed = seed;
    for (int t = 0; t < trials; ++t) {
        const Eigen::MatrixXd a =
            sample_omega(rows, n, params, seed + static_cast<std::uint64_t>(t));
        report.samples.push_back(linalg::spectral_norm_power(a, kPowerTol) /
                                 std::sqrt(static_cast<double>(n)));
    }
    // No published constant to test against; report the empirical scale.
    for (double s : report.samples) report.bound = std::max(report.bound, s);
    return report;
}

double chernoff_bound(long long k, double p, double delta) {
    if (k < 1) throw InvalidInput("chernoff_bound: k must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw InvalidInput("chernoff_bound: p must be in (0, 1)");
    if (!(delta > 0.0)) throw InvalidInput("chernoff_bound: delta must be positive");
    const double log_base = delta - (1.0 + delta) * std::log1p(delta);
    return std::exp(p * static_cast<double>(k) * log_base);
}

double chernoff_sqrt_bound(long long k, double p, double a) {
    if (k < 1) throw InvalidInput("chernoff_sqrt_bound: k must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw InvalidInput("chernoff_sqrt_bound: p must be in (0, 1)");
    if (!(a > 0.0 && a < p * std::sqrt(static_cast<double>(k))))
        throw InvalidInput("chernoff_sqrt_bound: need a in (0, p*sqrt(k))");
    return 2.0 * std::exp(-a * a / p);
}

TrialReport check_recentering_bound(int n, int N, double p, int trials, std::uint64_t seed) {
    const OmegaParams params(p);
    TrialReport report;
    report.trials = trials;
    report.seed = seed;
    for (int t = 0; t < trials; ++t) {
        const Eigen::MatrixXd a =
            sample_omega(n, N, params, seed + static_cast<std::uint64_t>(t));
        double stat;
        try {
            const Eigen::MatrixXd recentered = recenter_columns(a, n);
            stat = (a - recentered).squaredNorm() / static_cast<double>(N);
        } catch (const SaturatedColumn&) {
            stat = std::numeric_limits<double>::infinity();
            ++report.violation_count;
        }
        report.samples.push_back(stat);
    }
    for (double s : report.samples)
        if (std::isfinite(s)) report.bound = std::max(report.bound, s);
    return report;
}

namespace {

WitnessSplit split_clique(const PlantedInstance& inst, double gamma) {
    const Graph& g = inst.clique_graph();
    const VertexSet& vstar = inst.planted_left;
    const int N = g.num_vertices();
    const int n = vstar.size();
    const double p = inst.params.p;
    if (!(p > 0.0 && p < 1.0))
        throw InvalidInput("decompose_random_W: instance edge probability must be in (0, 1)");

    WitnessSplit split;
    split.kind = ProblemKind::Clique;
    split.w = cert::build_clique_certificate(g, vstar, gamma).W;

    const double mu = 1.0 / n;
    const double low = omega_low(p) / n;
    Rng aux(inst.params.seed ^ kAuxSeedSalt);

    Eigen::MatrixXd iid(N, N);
    for (int i = 0; i < N; ++i) {
        const bool pi = vstar.contains(i);
        for (int j = 0; j <= i; ++j) {
            const bool pj = vstar.contains(j);
            double v;
            if (i == j) {
                v = aux.bernoulli(p) ? mu : low;  // planted or outside diagonal
            } else if (pi && pj) {
                v = aux.bernoulli(p) ? mu : low;  // planted block
            } else if (g.has_edge(i, j)) {
                v = mu;  // diversionary edge
            } else if (!pi && !pj) {
                v = split.w(i, j);  // outside non-edge, no correction
            } else {
                v = low;  // planted-outside non-edge
            }
            iid(i, j) = v;
            iid(j, i) = v;
        }
    }
    split.parts[0] = iid;

    Eigen::MatrixXd planted_corr = Eigen::MatrixXd::Zero(N, N);
    for (int i : vstar.members())
        for (int j : vstar.members()) planted_corr(i, j) = split.w(i, j) - iid(i, j);
    split.parts[1] = std::move(planted_corr);

    Eigen::MatrixXd diag_corr = Eigen::MatrixXd::Zero(N, N);
    for (int i = 0; i < N; ++i)
        if (!vstar.contains(i)) diag_corr(i, i) = split.w(i, i) - iid(i, i);
    split.parts[2] = std::move(diag_corr);

    Eigen::MatrixXd upper = Eigen::MatrixXd::Zero(N, N);
    Eigen::MatrixXd lower = Eigen::MatrixXd::Zero(N, N);
    for (int i : vstar.members()) {
        for (int j = 0; j < N; ++j) {
            if (vstar.contains(j)) continue;
            upper(i, j) = split.w(i, j) - iid(i, j);
            lower(j, i) = split.w(j, i) - iid(j, i);
        }
    }
    split.parts[3] = std::move(upper);
    split.parts[4] = std::move(lower);
    return split;
}

WitnessSplit split_biclique(const PlantedInstance& inst, double gamma) {
    const BipartiteGraph& g = inst.biclique_graph();
    const VertexSet& ustar = inst.planted_left;
    const VertexSet& vstar = inst.planted_right;
    const int M = g.left_count(), N = g.right_count();
    const int m = ustar.size(), n = vstar.size();
    const double p = inst.params.p;
    if (!(p > 0.0 && p < 1.0))
        throw InvalidInput("decompose_random_W: instance edge probability must be in (0, 1)");

    WitnessSplit split;
    split.kind = ProblemKind::Biclique;
    split.w = cert::build_biclique_certificate(g, ustar, vstar, gamma).W;

    const double scale = std::sqrt(static_cast<double>(m) * n);
    const double mu = 1.0 / scale;
    const double low = omega_low(p) / scale;
    Rng aux(inst.params.seed ^ kAuxSeedSalt);

    Eigen::MatrixXd iid(M, N);
    for (int i = 0; i < M; ++i) {
        const bool pi = ustar.contains(i);
        for (int j = 0; j < N; ++j) {
            const bool pj = vstar.contains(j);
            double v;
            if (pi && pj) {
                v = aux.bernoulli(p) ? mu : low;
            } else if (g.has_edge(i, j)) {
                v = mu;
            } else if (!pi && !pj) {
                v = split.w(i, j);
            } else {
                v = low;
            }
            iid(i, j) = v;
        }
    }
    split.parts[0] = iid;

    Eigen::MatrixXd planted_corr = Eigen::MatrixXd::Zero(M, N);
    for (int i : ustar.members())
        for (int j : vstar.members()) planted_corr(i, j) = split.w(i, j) - iid(i, j);
    split.parts[1] = std::move(planted_corr);

    // Planted rows over outside columns, then outside rows over planted
    // columns; no diagonal exists here, so the fifth part stays zero.
    Eigen::MatrixXd rows_corr = Eigen::MatrixXd::Zero(M, N);
    for (int i : ustar.members())
        for (int j = 0; j < N; ++j)
            if (!vstar.contains(j)) rows_corr(i, j) = split.w(i, j) - iid(i, j);
    split.parts[2] = std::move(rows_corr);

    Eigen::MatrixXd cols_corr = Eigen::MatrixXd::Zero(M, N);
    for (int j : vstar.members())
        for (int i = 0; i < M; ++i)
            if (!ustar.contains(i)) cols_corr(i, j) = split.w(i, j) - iid(i, j);
    split.parts[3] = std::move(cols_corr);
    split.parts[4] = Eigen::MatrixXd::Zero(M, N);
    return split;
}

}  // namespace

WitnessSplit decompose_random_W(const PlantedInstance& inst, double gamma) {
    if (inst.params.model != EdgeModel::Random)
        throw InvalidInput("decompose_random_W: instance must come from the random model");
    WitnessSplit split = inst.kind == ProblemKind::Clique ? split_clique(inst, gamma)
                                                          : split_biclique(inst, gamma);
    for (std::size_t k = 0; k < split.parts.size(); ++k) {
        split.frobenius[k] = split.parts[k].norm();
        split.spectral[k] =
            split.frobenius[k] == 0.0 ? 0.0 : linalg::spectral_norm_gram(split.parts[k]);
    }
    return split;
}

}  // namespace nuclique::rmt
