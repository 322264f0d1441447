#pragma once

#include <Eigen/Dense>

namespace nuclique::linalg {

/// Sum of singular values. Throws InvalidInput on non-finite entries.
double nuclear_norm(const Eigen::MatrixXd& a);

/// Largest singular value, computed by full SVD.
double spectral_norm(const Eigen::MatrixXd& a);

/// Square root of the sum of squared entries.
double frobenius_norm(const Eigen::MatrixXd& a);

/// Largest singular value estimated by power iteration on A^T A.
/// Converges from a fixed deterministic start vector; `tol` is the
/// relative change between successive estimates.
double spectral_norm_power(const Eigen::MatrixXd& a, double tol = 1e-10,
                           int max_iterations = 20000);

/// Largest singular value as sqrt(lambda_max) of the smaller Gram
/// matrix (eigenvalues only). Exact and much faster than a full SVD;
/// the squared spectrum limits resolution to sqrt(eps) * ||A||, which
/// is irrelevant for the top value.
double spectral_norm_gram(const Eigen::MatrixXd& a);

/// All singular values, descending.
Eigen::VectorXd singular_values(const Eigen::MatrixXd& a);

struct SingularTriplet {
    double sigma = 0.0;
    Eigen::VectorXd u;
    Eigen::VectorXd v;
};

/// Top singular triplet; the sign is fixed so that the largest-magnitude
/// entry of u is positive.
SingularTriplet top_singular_triplet(const Eigen::MatrixXd& a);

/// Soft-threshold the singular values by tau (the nuclear-norm proximal map).
Eigen::MatrixXd svt(const Eigen::MatrixXd& a, double tau);

/// Same map for symmetric input via an eigendecomposition; agrees with
/// svt() on symmetric matrices.
Eigen::MatrixXd svt_symmetric(const Eigen::MatrixXd& a, double tau);

/// Number of singular values above tol * sigma_max.
int matrix_rank(const Eigen::MatrixXd& a, double tol);

}  // namespace nuclique::linalg
