#include "nuclique/certificate.hpp"

#include <cmath>
#include <string>

#include "nuclique/errors.hpp"
#include "nuclique/linalg.hpp"
#include "nuclique/rng.hpp"

namespace nuclique::cert {

namespace {

constexpr double kStrictMargin = 1e-8;
constexpr double kKktTol = 1e-10;

double spectral_norm_for_verify(const Eigen::MatrixXd& w) {
    // Witness spectra are nearly symmetric, which makes the top of
    // W^T W almost two-fold degenerate and power iteration crawl, so
    // desk-scale inputs take the exact eigenvalue route directly.
    if (std::min(w.rows(), w.cols()) <= 800) return linalg::spectral_norm_gram(w);
    const double est = linalg::spectral_norm_power(w, 1e-10, 2000);
    // The pass/fail boundary sits at 1; take the exact route when the
    // estimate is close enough that power-iteration error could matter.
    if (std::abs(est - 1.0) < 1e-4) return linalg::spectral_norm(w);
    return est;
}

Diagnostics compute_diagnostics(const Certificate& cert) {
    Diagnostics d;
    d.W_spectral = spectral_norm_for_verify(cert.W);
    d.W_frobenius = cert.W.norm();

    const Eigen::VectorXd ubar = cert.ustar.characteristic_vector();
    const Eigen::VectorXd vbar = cert.vstar.characteristic_vector();
    d.right_null_residual = (cert.W * vbar).cwiseAbs().maxCoeff();
    d.left_null_residual = (cert.W.transpose() * ubar).cwiseAbs().maxCoeff();

    const double scale =
        std::sqrt(static_cast<double>(cert.ustar.size()) * cert.vstar.size());
    Eigen::MatrixXd residual =
        (ubar * vbar.transpose()) / scale + cert.W -
        Eigen::MatrixXd::Constant(cert.W.rows(), cert.W.cols(), cert.mu);
    for (const LambdaEntry& e : cert.lambda) residual(e.i, e.j) -= e.value;
    d.kkt_residual = residual.cwiseAbs().maxCoeff();
    return d;
}

}  // namespace

double gamma_random(double p) {
    if (!(p >= 0.0 && p < 1.0)) throw InvalidInput("gamma_random: p must be in [0, 1)");
    return -p / (1.0 - p);
}

Certificate build_clique_certificate(const Graph& g, const VertexSet& vstar, double gamma) {
    const int N = g.num_vertices();
    const int n = vstar.size();
    if (vstar.universe_size() != N)
        throw InvalidInput("build_clique_certificate: planted set sized for another graph");
    if (n == 0) throw InvalidInput("build_clique_certificate: empty planted set");
    if (!is_clique(g, vstar))
        throw InvalidInput("build_clique_certificate: set does not induce a clique");

    // Degree of each outside vertex into the planted set; a vertex
    // adjacent to all of it makes the witness impossible.
    std::vector<int> degree(static_cast<std::size_t>(N), 0);
    std::vector<int> saturated;
    for (int j = 0; j < N; ++j) {
        if (vstar.contains(j)) continue;
        degree[static_cast<std::size_t>(j)] = clique_degree_to_planted(g, vstar, j);
        if (degree[static_cast<std::size_t>(j)] == n) saturated.push_back(j);
    }
    if (!saturated.empty())
        throw CertificateInfeasible(
            "clique certificate infeasible: " + std::to_string(saturated.size()) +
                " outside vertex(es) adjacent to the whole planted set",
            saturated);

    Certificate cert;
    cert.kind = ProblemKind::Clique;
    cert.ustar = vstar;
    cert.vstar = vstar;
    cert.gamma = gamma;
    cert.mu = 1.0 / n;
    cert.W = Eigen::MatrixXd::Zero(N, N);

    const double mu = cert.mu;
    auto add_lambda = [&](int i, int j, double value) {
        cert.lambda.push_back({i, j, value});
    };

    // The problem's edge set implicitly contains the diagonal, so the
    // forbidden set is exactly the off-diagonal non-edges.
    for (int i = 0; i < N; ++i) {
        const bool i_planted = vstar.contains(i);
        if (!i_planted) cert.W(i, i) = mu;  // free diagonal outside the planted block
        for (int j = i + 1; j < N; ++j) {
            const bool j_planted = vstar.contains(j);
            if (i_planted && j_planted) continue;  // planted block: W = 0, no multiplier
            if (g.has_edge(i, j)) {
                cert.W(i, j) = mu;  // diversionary edge
                cert.W(j, i) = mu;
                continue;
            }
            double w;
            if (!i_planted && !j_planted) {
                w = gamma * mu;  // outside non-edge
            } else {
                const int outside = i_planted ? j : i;
                const int pj = degree[static_cast<std::size_t>(outside)];
                w = -static_cast<double>(pj) / (static_cast<double>(n) * (n - pj));
            }
            cert.W(i, j) = w;
            cert.W(j, i) = w;
            add_lambda(i, j, w - mu);
            add_lambda(j, i, w - mu);
        }
    }

    cert.diagnostics = compute_diagnostics(cert);
    return cert;
}

Certificate build_biclique_certificate(const BipartiteGraph& g, const VertexSet& ustar,
                                       const VertexSet& vstar, double gamma) {
    const int M = g.left_count();
    const int N = g.right_count();
    const int m = ustar.size();
    const int n = vstar.size();
    if (ustar.universe_size() != M || vstar.universe_size() != N)
        throw InvalidInput("build_biclique_certificate: planted sets sized for another graph");
    if (m == 0 || n == 0) throw InvalidInput("build_biclique_certificate: empty planted set");
    if (!is_biclique(g, ustar, vstar))
        throw InvalidInput("build_biclique_certificate: sets do not induce a biclique");

    const BicliqueDegrees deg = biclique_degrees(g, ustar, vstar);
    std::vector<int> saturated;
    for (int i = 0; i < M; ++i)
        if (!ustar.contains(i) && deg.p[static_cast<std::size_t>(i)] == n)
            saturated.push_back(i);
    for (int j = 0; j < N; ++j)
        if (!vstar.contains(j) && deg.q[static_cast<std::size_t>(j)] == m)
            saturated.push_back(M + j);  // right vertices offset by M in the report
    if (!saturated.empty())
        throw CertificateInfeasible(
            "biclique certificate infeasible: " + std::to_string(saturated.size()) +
                " outside vertex(es) adjacent to the whole planted side",
            saturated);

    Certificate cert;
    cert.kind = ProblemKind::Biclique;
    cert.ustar = ustar;
    cert.vstar = vstar;
    cert.gamma = gamma;
    const double scale = std::sqrt(static_cast<double>(m) * n);
    cert.mu = 1.0 / scale;
    cert.W = Eigen::MatrixXd::Zero(M, N);

    const double mu = cert.mu;
    for (int i = 0; i < M; ++i) {
        const bool i_planted = ustar.contains(i);
        for (int j = 0; j < N; ++j) {
            const bool j_planted = vstar.contains(j);
            if (i_planted && j_planted) continue;  // planted block
            if (g.has_edge(i, j)) {
                cert.W(i, j) = mu;  // diversionary edge
                continue;
            }
            double w;
            if (!i_planted && j_planted) {
                const int pi = deg.p[static_cast<std::size_t>(i)];
                w = -static_cast<double>(pi) / ((n - pi) * scale);
            } else if (i_planted && !j_planted) {
                const int qj = deg.q[static_cast<std::size_t>(j)];
                w = -static_cast<double>(qj) / ((m - qj) * scale);
            } else {
                w = gamma * mu;  // outside non-edge
            }
            cert.W(i, j) = w;
            cert.lambda.push_back({i, j, w - mu});
        }
    }

    cert.diagnostics = compute_diagnostics(cert);
    return cert;
}

namespace {

VerificationReport verify_impl(const Certificate& cert, bool strict, int m, int n) {
    VerificationReport report;
    report.strict = strict;
    report.mu = cert.mu;
    report.gamma = cert.gamma;
    report.diagnostics = compute_diagnostics(cert);

    const double null_tol = 1e-12 * std::max(m, n);
    report.null_space_ok = report.diagnostics.left_null_residual <= null_tol &&
                           report.diagnostics.right_null_residual <= null_tol;
    report.norm_ok = strict ? report.diagnostics.W_spectral < 1.0 - kStrictMargin
                            : report.diagnostics.W_spectral <= 1.0 + 1e-12;
    report.mu_positive = strict ? cert.mu > kStrictMargin : cert.mu >= 0.0;
    report.kkt_identity_ok = report.diagnostics.kkt_residual <= kKktTol;
    report.overall = report.null_space_ok && report.norm_ok && report.mu_positive &&
                     report.kkt_identity_ok;
    return report;
}

}  // namespace

VerificationReport verify(const Certificate& cert, const Graph& g, const VertexSet& vstar,
                          bool strict) {
    if (cert.kind != ProblemKind::Clique || cert.W.rows() != g.num_vertices() ||
        cert.W.cols() != g.num_vertices() || !(cert.vstar == vstar))
        throw InvalidInput("verify: certificate was not built for this instance");
    return verify_impl(cert, strict, vstar.size(), vstar.size());
}

VerificationReport verify(const Certificate& cert, const BipartiteGraph& g,
                          const VertexSet& ustar, const VertexSet& vstar, bool strict) {
    if (cert.kind != ProblemKind::Biclique || cert.W.rows() != g.left_count() ||
        cert.W.cols() != g.right_count() || !(cert.ustar == ustar) || !(cert.vstar == vstar))
        throw InvalidInput("verify: certificate was not built for this instance");
    return verify_impl(cert, strict, ustar.size(), vstar.size());
}

VerificationReport verify(const Certificate& cert, const PlantedInstance& inst, bool strict) {
    if (inst.kind == ProblemKind::Clique)
        return verify(cert, inst.clique_graph(), inst.planted_left, strict);
    return verify(cert, inst.biclique_graph(), inst.planted_left, inst.planted_right, strict);
}

bool clique_frobenius_screen(const Graph& g, const VertexSet& vstar) {
    try {
        const Certificate cert = build_clique_certificate(g, vstar, kGammaAdversarial);
        return cert.W.norm() < 1.0;
    } catch (const CertificateInfeasible&) {
        return false;
    }
}

const Eigen::MatrixXd& SubspaceParts::part(int k) const {
    switch (k) {
        case 1: return double_null;
        case 2: return outside_by_planted;
        case 3: return planted_by_outside;
        case 4: return planted_zero_sum;
        case 5: return planted_scale;
        default: throw InvalidInput("SubspaceParts::part: index must be 1..5");
    }
}

Eigen::MatrixXd SubspaceParts::sum() const {
    return double_null + outside_by_planted + planted_by_outside + planted_zero_sum +
           planted_scale;
}

SubspaceParts subspace_decompose(const Eigen::MatrixXd& z, const VertexSet& ustar,
                                 const VertexSet& vstar) {
    if (ustar.universe_size() != z.rows() || vstar.universe_size() != z.cols())
        throw InvalidInput("subspace_decompose: dimensions do not match the planted sets");
    if (ustar.empty() || vstar.empty())
        throw InvalidInput("subspace_decompose: empty planted set");

    const Eigen::VectorXd ubar = ustar.characteristic_vector();
    const Eigen::VectorXd vbar = vstar.characteristic_vector();
    const double m = static_cast<double>(ustar.size());
    const double n = static_cast<double>(vstar.size());

    SubspaceParts parts;
    const double alpha = ubar.dot(z * vbar) / (m * n);
    parts.planted_scale = alpha * (ubar * vbar.transpose());

    const Eigen::MatrixXd zdot = z - parts.planted_scale;
    Eigen::VectorXd x = (zdot * vbar) / n;
    Eigen::VectorXd y = (zdot.transpose() * ubar) / m;
    parts.double_null = zdot - x * vbar.transpose() - ubar * y.transpose();

    Eigen::VectorXd x_in = Eigen::VectorXd::Zero(x.size());
    for (int i : ustar.members()) x_in(i) = x(i);
    Eigen::VectorXd y_in = Eigen::VectorXd::Zero(y.size());
    for (int j : vstar.members()) y_in(j) = y(j);

    parts.outside_by_planted = (x - x_in) * vbar.transpose();
    parts.planted_by_outside = ubar * (y - y_in).transpose();
    parts.planted_zero_sum = x_in * vbar.transpose() + ubar * y_in.transpose();
    return parts;
}

bool subgradient_check(const Eigen::MatrixXd& xstar, const Eigen::MatrixXd& phi,
                       int trials, std::uint64_t seed) {
    if (phi.rows() != xstar.rows() || phi.cols() != xstar.cols())
        throw InvalidInput("subgradient_check: shape mismatch");
    const double base = linalg::nuclear_norm(xstar);
    Rng rng(seed);
    // Slack for the SVD round-off in the two nuclear norms.
    const double tol = 1e-9 * std::max(1.0, base);
    for (int t = 0; t < trials; ++t) {
        Eigen::MatrixXd y(xstar.rows(), xstar.cols());
        for (Eigen::Index i = 0; i < y.rows(); ++i)
            for (Eigen::Index j = 0; j < y.cols(); ++j) y(i, j) = rng.gaussian();
        const double lhs = linalg::nuclear_norm(y) - base;
        const double rhs = (phi.array() * (y - xstar).array()).sum();
        if (lhs < rhs - tol) return false;
    }
    return true;
}

}  // namespace nuclique::cert
