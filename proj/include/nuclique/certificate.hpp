#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "nuclique/graph.hpp"

namespace nuclique::cert {

/// Multiplier value attached to one forbidden (non-edge) position.
struct LambdaEntry {
    int i;
    int j;
    double value;
};

struct Diagnostics {
    double W_spectral = 0.0;
    double W_frobenius = 0.0;
    double kkt_residual = 0.0;
    double left_null_residual = 0.0;   // max |u^T W|
    double right_null_residual = 0.0;  // max |W v|
    std::vector<int> saturated_vertices;
};

/// KKT witness (W, lambda, mu) for a planted set, with the gamma used on
/// outside non-edges. lambda is stored exactly on the forbidden pairs
/// (both orientations for the clique problem, whose forbidden set is
/// symmetric). Diagnostics are filled at build time and recomputed from
/// scratch by verify().
struct Certificate {
    ProblemKind kind = ProblemKind::Clique;
    Eigen::MatrixXd W;
    std::vector<LambdaEntry> lambda;
    double mu = 0.0;
    double gamma = 0.0;
    VertexSet ustar;  // equals vstar for cliques
    VertexSet vstar;
    Diagnostics diagnostics;
};

struct VerificationReport {
    bool null_space_ok = false;
    bool norm_ok = false;
    bool mu_positive = false;
    bool kkt_identity_ok = false;
    bool overall = false;
    bool strict = false;
    double mu = 0.0;
    double gamma = 0.0;
    Diagnostics diagnostics;
};

/// gamma preset for graphs whose diversionary edges are random with
/// probability p: the outside non-edge entries of W then have mean zero.
double gamma_random(double p);

/// gamma preset for the adversarial budget analysis.
inline constexpr double kGammaAdversarial = 0.0;

/// Entrywise witness for a planted clique; mu = 1/n. Throws
/// CertificateInfeasible when an outside vertex is adjacent to all of
/// vstar (no multiplier assignment balances that row).
Certificate build_clique_certificate(const Graph& g, const VertexSet& vstar, double gamma);

/// Entrywise witness for a planted biclique; mu = 1/sqrt(m*n).
Certificate build_biclique_certificate(const BipartiteGraph& g, const VertexSet& ustar,
                                       const VertexSet& vstar, double gamma);

/// Recomputes every diagnostic and checks the optimality conditions.
/// strict additionally demands ||W|| < 1 - 1e-8 and mu > 1e-8, the
/// uniqueness regime.
VerificationReport verify(const Certificate& cert, const Graph& g, const VertexSet& vstar,
                          bool strict);
VerificationReport verify(const Certificate& cert, const BipartiteGraph& g,
                          const VertexSet& ustar, const VertexSet& vstar, bool strict);
VerificationReport verify(const Certificate& cert, const PlantedInstance& inst, bool strict);

/// Clique analogue of gen::adversarial_screen: no closed form is
/// available, so screen by the Frobenius norm of the built witness.
bool clique_frobenius_screen(const Graph& g, const VertexSet& vstar);

/// Orthogonal five-way split of an M x N matrix relative to a planted
/// pair (U*, V*). Parts 1..5: doubly-null (annihilates both
/// characteristic vectors), outside-rows-by-planted, planted-by-outside-
/// columns, planted-block zero-sum, planted-block scale.
struct SubspaceParts {
    Eigen::MatrixXd double_null;
    Eigen::MatrixXd outside_by_planted;
    Eigen::MatrixXd planted_by_outside;
    Eigen::MatrixXd planted_zero_sum;
    Eigen::MatrixXd planted_scale;

    const Eigen::MatrixXd& part(int k) const;
    Eigen::MatrixXd sum() const;
};

SubspaceParts subspace_decompose(const Eigen::MatrixXd& z, const VertexSet& ustar,
                                 const VertexSet& vstar);

/// Samples `trials` Gaussian matrices Y and checks the subgradient
/// inequality ||Y||_* - ||X*||_* >= phi . (Y - X*) for each.
bool subgradient_check(const Eigen::MatrixXd& xstar, const Eigen::MatrixXd& phi,
                       int trials, std::uint64_t seed = 2024);

}  // namespace nuclique::cert
