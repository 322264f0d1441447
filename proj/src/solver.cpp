#include "nuclique/solver.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "nuclique/errors.hpp"
#include "nuclique/linalg.hpp"

namespace nuclique::solver {

namespace {

void check_config(const SolverConfig& cfg) {
    if (cfg.max_iterations < 1) throw InvalidInput("solver: max_iterations must be >= 1");
    if (!(cfg.primal_tolerance > 0) || !(cfg.dual_tolerance > 0))
        throw InvalidInput("solver: tolerances must be positive");
    if (!(cfg.step_parameter > 0)) throw InvalidInput("solver: step_parameter must be positive");
    if (!(cfg.rounding_threshold > 0 && cfg.rounding_threshold <= 1))
        throw InvalidInput("solver: rounding_threshold must be in (0, 1]");
}

}  // namespace

namespace detail {

/// Soft-threshold the singular values, reconstructing only from the
/// surviving pairs. Returns the nuclear norm of the result.
double svt_symmetric_inplace(const Eigen::MatrixXd& a, double tau, Eigen::MatrixXd& out) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    const Eigen::VectorXd& d = es.eigenvalues();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < d.size(); ++i)
        if (std::abs(d(i)) > tau) keep.push_back(i);
    out.setZero(a.rows(), a.cols());
    if (keep.empty()) return 0.0;
    double nuc = 0.0;
    Eigen::MatrixXd q(a.rows(), static_cast<Eigen::Index>(keep.size()));
    Eigen::VectorXd s(static_cast<Eigen::Index>(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k) {
        q.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(keep[k]);
        const double mag = std::abs(d(keep[k])) - tau;
        s(static_cast<Eigen::Index>(k)) = d(keep[k]) >= 0 ? mag : -mag;
        nuc += mag;
    }
    out.noalias() = q * s.asDiagonal() * q.transpose();
    return nuc;
}

/// Rectangular case via an eigendecomposition of the smaller Gram
/// matrix: much cheaper than a full SVD, and safe whenever tau is well
/// above the sqrt(eps)-scale resolution floor of the squared spectrum.
double svt_rectangular_inplace(const Eigen::MatrixXd& a, double tau, Eigen::MatrixXd& out) {
    if (tau <= 1e-6 * a.norm()) {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::VectorXd& sv = svd.singularValues();
        Eigen::Index k = 0;
        while (k < sv.size() && sv(k) > tau) ++k;
        out.setZero(a.rows(), a.cols());
        if (k == 0) return 0.0;
        Eigen::VectorXd s = sv.head(k).array() - tau;
        out.noalias() =
            svd.matrixU().leftCols(k) * s.asDiagonal() * svd.matrixV().leftCols(k).transpose();
        return s.sum();
    }

    const bool tall = a.rows() >= a.cols();
    Eigen::MatrixXd gram;
    if (tall)
        gram.noalias() = a.transpose() * a;
    else
        gram.noalias() = a * a.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double tau2 = tau * tau;
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev(i) > tau2) keep.push_back(i);
    out.setZero(a.rows(), a.cols());
    if (keep.empty()) return 0.0;

    double nuc = 0.0;
    Eigen::MatrixXd v(gram.rows(), static_cast<Eigen::Index>(keep.size()));
    Eigen::VectorXd scale(static_cast<Eigen::Index>(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k) {
        v.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(keep[k]);
        const double sigma = std::sqrt(ev(keep[k]));
        scale(static_cast<Eigen::Index>(k)) = (sigma - tau) / sigma;
        nuc += sigma - tau;
    }
    // A v = (left factor) * sigma, so rescaling by (sigma-tau)/sigma
    // reconstructs the shrunken matrix without forming U explicitly.
    if (tall) {
        const Eigen::MatrixXd av = a * v;
        out.noalias() = av * scale.asDiagonal() * v.transpose();
    } else {
        const Eigen::MatrixXd atv = a.transpose() * v;
        out.noalias() = v * scale.asDiagonal() * atv.transpose();
    }
    return nuc;
}

double svt_inplace(const Eigen::MatrixXd& a, double tau, bool symmetric, Eigen::MatrixXd& out) {
    return symmetric ? svt_symmetric_inplace(a, tau, out) : svt_rectangular_inplace(a, tau, out);
}

}  // namespace detail

namespace {

using detail::svt_inplace;

struct AdmmOutcome {
    Eigen::MatrixXd X;
    bool converged = false;
    int iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double objective = 0.0;
    std::vector<double> merit_history;
    std::vector<double> primal_history;
    std::vector<double> dual_history;
};

/// Splitting iteration for min ||X||_* s.t. X supported on `mask`,
/// sum(X) >= 1. One half-step applies the nuclear-norm proximal map,
/// the other projects onto the constraint set; a scaled dual variable
/// couples them, with the coupling weight adapted by residual balancing.
AdmmOutcome run_admm(const Eigen::MatrixXd& mask, bool symmetric, const SolverConfig& cfg) {
    const double nfree = mask.sum();
    if (nfree == 0.0) throw InvalidInput("solver: constraint pattern forbids every entry");

    // Projection onto {support(mask), sum >= 1}: zero the forbidden
    // entries, then spread any sum deficit evenly over the free ones.
    const auto project_in_place = [&](Eigen::MatrixXd& y) {
        y.array() *= mask.array();
        const double s = y.sum();
        if (s < 1.0) y += ((1.0 - s) / nfree) * mask;
    };

    double rho = cfg.step_parameter;
    // Both values sit in the provably convergent (0, 2) range; the
    // rectangular problems tolerate (and profit from) the larger one,
    // while the symmetric path is faster at 1.6.
    const double kOverRelax = symmetric ? 1.6 : 1.8;
    Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(mask.rows(), mask.cols());
    project_in_place(Y);
    Eigen::MatrixXd U = Eigen::MatrixXd::Zero(mask.rows(), mask.cols());
    Eigen::MatrixXd work(mask.rows(), mask.cols());
    Eigen::MatrixXd relaxed(mask.rows(), mask.cols());
    Eigen::MatrixXd y_prev(mask.rows(), mask.cols());

    AdmmOutcome res;
    for (res.iterations = 1; res.iterations <= cfg.max_iterations; ++res.iterations) {
        work = Y - U;
        res.objective = svt_inplace(work, 1.0 / rho, symmetric, res.X);

        relaxed = kOverRelax * res.X + (1.0 - kOverRelax) * Y;
        y_prev.swap(Y);
        Y = relaxed + U;
        project_in_place(Y);
        U += relaxed - Y;

        res.primal_residual = (res.X - Y).norm();
        res.dual_residual = rho * (Y - y_prev).norm();
        if (cfg.track_merit) {
            res.merit_history.push_back(res.objective);
            res.primal_history.push_back(res.primal_residual);
            res.dual_history.push_back(res.dual_residual);
        }
        if (res.primal_residual <= cfg.primal_tolerance &&
            res.dual_residual <= cfg.dual_tolerance) {
            // The reported X must itself satisfy the constraints to
            // tolerance, not merely sit near the feasible iterate.
            const double forbidden = (res.X.array() * (1.0 - mask.array())).abs().maxCoeff();
            const double deficit = std::max(0.0, 1.0 - res.X.sum());
            if (forbidden <= cfg.primal_tolerance && deficit <= cfg.primal_tolerance) {
                res.converged = true;
                break;
            }
        }
        // Rebalancing every step keeps perturbing the dual variable and
        // can cycle; adapt only occasionally and on a clear imbalance.
        if (res.iterations % 10 == 0) {
            if (res.primal_residual > 5.0 * res.dual_residual && rho < 1e12) {
                rho *= 2.0;
                U *= 0.5;
            } else if (res.dual_residual > 5.0 * res.primal_residual && rho > 1e-8) {
                rho *= 0.5;
                U *= 2.0;
            }
        }
    }
    res.iterations = std::min(res.iterations, cfg.max_iterations);
    return res;
}

struct Rounding {
    VertexSet left;
    VertexSet right;
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    bool degenerate = false;
};

std::vector<int> threshold_scores(const Eigen::VectorXd& scores, double threshold) {
    const double peak = scores.maxCoeff();
    std::vector<int> picked;
    if (peak <= 0.0) return picked;
    for (Eigen::Index i = 0; i < scores.size(); ++i)
        if (scores(i) / peak >= threshold) picked.push_back(static_cast<int>(i));
    return picked;
}

/// Drop the lowest-score offending vertex until the set induces a clique.
void repair_clique(const Graph& g, std::vector<int>& cand, const Eigen::VectorXd& scores) {
    while (true) {
        std::vector<char> offending(cand.size(), 0);
        bool any = false;
        for (std::size_t a = 0; a < cand.size(); ++a)
            for (std::size_t b = a + 1; b < cand.size(); ++b)
                if (!g.has_edge(cand[a], cand[b])) {
                    offending[a] = offending[b] = 1;
                    any = true;
                }
        if (!any) return;
        std::size_t worst = cand.size();
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (!offending[a]) continue;
            if (worst == cand.size() || scores(cand[a]) < scores(cand[worst]) ||
                (scores(cand[a]) == scores(cand[worst]) && cand[a] > cand[worst]))
                worst = a;
        }
        cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(worst));
    }
}

void repair_biclique(const BipartiteGraph& g, std::vector<int>& lcand, std::vector<int>& rcand,
                     const Eigen::VectorXd& lscores, const Eigen::VectorXd& rscores) {
    while (true) {
        std::vector<char> loff(lcand.size(), 0), roff(rcand.size(), 0);
        bool any = false;
        for (std::size_t a = 0; a < lcand.size(); ++a)
            for (std::size_t b = 0; b < rcand.size(); ++b)
                if (!g.has_edge(lcand[a], rcand[b])) {
                    loff[a] = roff[b] = 1;
                    any = true;
                }
        if (!any) return;
        // Lowest score among offenders goes first; ties prefer the left
        // side and then the larger index.
        bool drop_left = false;
        std::size_t at = 0;
        double best = 0.0;
        bool found = false;
        for (std::size_t a = 0; a < lcand.size(); ++a) {
            if (!loff[a]) continue;
            const double sc = lscores(lcand[a]);
            if (!found || sc < best || (sc == best && drop_left && lcand[a] > lcand[at])) {
                found = true;
                best = sc;
                drop_left = true;
                at = a;
            }
        }
        for (std::size_t b = 0; b < rcand.size(); ++b) {
            if (!roff[b]) continue;
            const double sc = rscores(rcand[b]);
            if (!found || sc < best ||
                (sc == best && !drop_left && rcand[b] > rcand[at])) {
                found = true;
                best = sc;
                drop_left = false;
                at = b;
            }
        }
        if (drop_left)
            lcand.erase(lcand.begin() + static_cast<std::ptrdiff_t>(at));
        else
            rcand.erase(rcand.begin() + static_cast<std::ptrdiff_t>(at));
    }
}

constexpr double kDegenerateGap = 0.99;

}  // namespace

Eigen::MatrixXd SolverResult::scaled_to_unit_peak() const {
    const double peak = X.cwiseAbs().maxCoeff();
    if (peak == 0.0) return X;
    return X / peak;
}

SolverResult solve_clique_relaxation(const Graph& g, const SolverConfig& cfg) {
    check_config(cfg);
    if (g.num_vertices() == 0) throw InvalidInput("solve_clique_relaxation: empty graph");

    Eigen::MatrixXd mask = g.adjacency_matrix();
    mask.diagonal().setOnes();

    AdmmOutcome admm = run_admm(mask, /*symmetric=*/true, cfg);

    SolverResult result;
    result.kind = ProblemKind::Clique;
    result.X = std::move(admm.X);
    result.converged = admm.converged;
    result.iterations = admm.iterations;
    result.primal_residual = admm.primal_residual;
    result.dual_residual = admm.dual_residual;
    result.objective = admm.objective;
    result.merit_history = std::move(admm.merit_history);
    result.primal_history = std::move(admm.primal_history);
    result.dual_history = std::move(admm.dual_history);
    result.candidate = VertexSet({}, g.num_vertices());
    result.candidate_right = VertexSet({}, 0);

    Eigen::BDCSVD<Eigen::MatrixXd> svd(result.X, Eigen::ComputeThinU);
    const double sigma1 = svd.singularValues()(0);
    const double sigma2 = svd.singularValues().size() > 1 ? svd.singularValues()(1) : 0.0;
    if (sigma1 <= 1e-300) {
        result.degenerate = true;
        return result;
    }
    result.rank_one_gap = sigma2 / sigma1;
    if (result.rank_one_gap >= kDegenerateGap) {
        // Top singular value not separated: uniqueness is absent, so
        // report failure instead of guessing a vertex set.
        result.degenerate = true;
        return result;
    }

    Eigen::VectorXd scores = svd.matrixU().col(0);
    Eigen::Index peak_at;
    scores.cwiseAbs().maxCoeff(&peak_at);
    if (scores(peak_at) < 0) scores = -scores;

    std::vector<int> cand = threshold_scores(scores, cfg.rounding_threshold);
    repair_clique(g, cand, scores);
    result.candidate = VertexSet(cand, g.num_vertices());

    if (cfg.polish && !cand.empty()) {
        const double polished_objective = 1.0 / static_cast<double>(cand.size());
        if (polished_objective <= result.objective + 10.0 * cfg.primal_tolerance) {
            const Eigen::VectorXd chi = result.candidate.characteristic_vector();
            result.X = (chi * chi.transpose()) / static_cast<double>(cand.size() * cand.size());
            result.objective = polished_objective;
            result.rank_one_gap = 0.0;
        }
    }
    return result;
}

SolverResult solve_biclique_relaxation(const BipartiteGraph& g, const SolverConfig& cfg) {
    check_config(cfg);
    if (g.left_count() == 0 || g.right_count() == 0)
        throw InvalidInput("solve_biclique_relaxation: empty side");
    if (g.num_edges() == 0)
        throw InvalidInput("solve_biclique_relaxation: no edges, problem infeasible");

    const Eigen::MatrixXd mask = g.adjacency_matrix();
    AdmmOutcome admm = run_admm(mask, /*symmetric=*/false, cfg);

    SolverResult result;
    result.kind = ProblemKind::Biclique;
    result.X = std::move(admm.X);
    result.converged = admm.converged;
    result.iterations = admm.iterations;
    result.primal_residual = admm.primal_residual;
    result.dual_residual = admm.dual_residual;
    result.objective = admm.objective;
    result.merit_history = std::move(admm.merit_history);
    result.primal_history = std::move(admm.primal_history);
    result.dual_history = std::move(admm.dual_history);
    result.candidate = VertexSet({}, g.left_count());
    result.candidate_right = VertexSet({}, g.right_count());

    Eigen::BDCSVD<Eigen::MatrixXd> svd(result.X, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double sigma1 = svd.singularValues()(0);
    const double sigma2 = svd.singularValues().size() > 1 ? svd.singularValues()(1) : 0.0;
    if (sigma1 <= 1e-300) {
        result.degenerate = true;
        return result;
    }
    result.rank_one_gap = sigma2 / sigma1;
    if (result.rank_one_gap >= kDegenerateGap) {
        result.degenerate = true;
        return result;
    }

    Eigen::VectorXd lscores = svd.matrixU().col(0);
    Eigen::VectorXd rscores = svd.matrixV().col(0);
    Eigen::Index peak_at;
    lscores.cwiseAbs().maxCoeff(&peak_at);
    if (lscores(peak_at) < 0) {
        lscores = -lscores;
        rscores = -rscores;
    }

    std::vector<int> lcand = threshold_scores(lscores, cfg.rounding_threshold);
    std::vector<int> rcand = threshold_scores(rscores, cfg.rounding_threshold);
    repair_biclique(g, lcand, rcand, lscores, rscores);
    if (lcand.empty() || rcand.empty()) {
        lcand.clear();
        rcand.clear();
    }
    result.candidate = VertexSet(lcand, g.left_count());
    result.candidate_right = VertexSet(rcand, g.right_count());

    if (cfg.polish && !lcand.empty()) {
        const double size_product = static_cast<double>(lcand.size()) * rcand.size();
        const double polished_objective = 1.0 / std::sqrt(size_product);
        if (polished_objective <= result.objective + 10.0 * cfg.primal_tolerance) {
            const Eigen::VectorXd chi_u = result.candidate.characteristic_vector();
            const Eigen::VectorXd chi_v = result.candidate_right.characteristic_vector();
            result.X = (chi_u * chi_v.transpose()) / size_product;
            result.objective = polished_objective;
            result.rank_one_gap = 0.0;
        }
    }
    return result;
}

}  // namespace nuclique::solver
