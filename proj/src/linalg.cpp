#include "nuclique/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "nuclique/errors.hpp"

namespace nuclique::linalg {

namespace {

void require_finite(const Eigen::MatrixXd& a) {
    if (!a.allFinite()) throw InvalidInput("matrix has non-finite entries");
    if (a.rows() == 0 || a.cols() == 0) throw InvalidInput("matrix is empty");
}

}  // namespace

double nuclear_norm(const Eigen::MatrixXd& a) {
    require_finite(a);
    return Eigen::BDCSVD<Eigen::MatrixXd>(a).singularValues().sum();
}

double spectral_norm(const Eigen::MatrixXd& a) {
    require_finite(a);
    return Eigen::BDCSVD<Eigen::MatrixXd>(a).singularValues()(0);
}

double frobenius_norm(const Eigen::MatrixXd& a) {
    require_finite(a);
    return a.norm();
}

double spectral_norm_power(const Eigen::MatrixXd& a, double tol, int max_iterations) {
    require_finite(a);
    const Eigen::Index n = a.cols();
    // Deterministic start with a mild index-dependent tilt so it is not
    // orthogonal to the top singular subspace of structured inputs.
    Eigen::VectorXd v(n);
    for (Eigen::Index j = 0; j < n; ++j)
        v(j) = 1.0 + 0.5 * std::sin(static_cast<double>(j + 1));
    v.normalize();

    double est = 0.0;
    for (int it = 0; it < max_iterations; ++it) {
        Eigen::VectorXd w = a.transpose() * (a * v);
        const double norm = w.norm();
        if (norm == 0.0) return 0.0;  // start vector in the null space => A may still be 0
        v = w / norm;
        const double next = std::sqrt(norm);
        if (it > 0 && std::abs(next - est) <= tol * std::max(next, 1e-300)) return next;
        est = next;
    }
    return est;
}

double spectral_norm_gram(const Eigen::MatrixXd& a) {
    require_finite(a);
    Eigen::MatrixXd gram;
    if (a.rows() >= a.cols())
        gram.noalias() = a.transpose() * a;
    else
        gram.noalias() = a * a.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues().maxCoeff();
    return top > 0.0 ? std::sqrt(top) : 0.0;
}

Eigen::VectorXd singular_values(const Eigen::MatrixXd& a) {
    require_finite(a);
    return Eigen::BDCSVD<Eigen::MatrixXd>(a).singularValues();
}

SingularTriplet top_singular_triplet(const Eigen::MatrixXd& a) {
    require_finite(a);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SingularTriplet t;
    t.sigma = svd.singularValues()(0);
    t.u = svd.matrixU().col(0);
    t.v = svd.matrixV().col(0);
    Eigen::Index peak;
    t.u.cwiseAbs().maxCoeff(&peak);
    if (t.u(peak) < 0) {
        t.u = -t.u;
        t.v = -t.v;
    }
    return t;
}

Eigen::MatrixXd svt(const Eigen::MatrixXd& a, double tau) {
    require_finite(a);
    if (tau < 0) throw InvalidInput("svt: negative threshold");
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorXd s = svd.singularValues();
    for (Eigen::Index i = 0; i < s.size(); ++i) s(i) = std::max(s(i) - tau, 0.0);
    return svd.matrixU() * s.asDiagonal() * svd.matrixV().transpose();
}

Eigen::MatrixXd svt_symmetric(const Eigen::MatrixXd& a, double tau) {
    require_finite(a);
    if (tau < 0) throw InvalidInput("svt: negative threshold");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    Eigen::VectorXd d = es.eigenvalues();
    // Singular values of a symmetric matrix are |eigenvalues|; shrink the
    // magnitudes and keep the signs.
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        const double mag = std::max(std::abs(d(i)) - tau, 0.0);
        d(i) = d(i) >= 0 ? mag : -mag;
    }
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

int matrix_rank(const Eigen::MatrixXd& a, double tol) {
    require_finite(a);
    const Eigen::VectorXd s = singular_values(a);
    if (s(0) == 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > tol * s(0)) ++r;
    return r;
}

}  // namespace nuclique::linalg
