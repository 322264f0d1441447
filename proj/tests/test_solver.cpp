#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "nuclique/certificate.hpp"
#include "nuclique/errors.hpp"
#include "nuclique/generators.hpp"
#include "nuclique/graph.hpp"
#include "nuclique/linalg.hpp"
#include "nuclique/oracle.hpp"
#include "nuclique/rng.hpp"
#include "nuclique/solver.hpp"

using namespace nuclique;

namespace {

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

gen::RandomModelParams clique_params(int N, int n, double p, std::uint64_t seed) {
    gen::RandomModelParams params;
    params.N = N;
    params.n = n;
    params.p = p;
    params.seed = seed;
    return params;
}

void check_feasibility(const solver::SolverResult& result, const Eigen::MatrixXd& mask,
                       double tol) {
    CHECK((result.X.array() * (1.0 - mask.array())).abs().maxCoeff() <= tol);
    CHECK(result.X.sum() >= 1.0 - tol);
}

}  // namespace

TEST_CASE("complete graph solves to the scaled all-ones matrix") {
    const Graph g = complete_graph(4);
    const auto result = solver::solve_clique_relaxation(g);

    CHECK(result.converged);
    CHECK_FALSE(result.degenerate);
    CHECK(result.candidate.members() == std::vector<int>{0, 1, 2, 3});
    CHECK(result.rank_one_gap <= 1e-4);
    CHECK(result.objective == doctest::Approx(0.25).epsilon(1e-4));

    const Eigen::MatrixXd peak = result.scaled_to_unit_peak();
    CHECK((peak - Eigen::MatrixXd::Ones(4, 4)).cwiseAbs().maxCoeff() <= 1e-3);

    Eigen::MatrixXd mask = g.adjacency_matrix();
    mask.diagonal().setOnes();
    check_feasibility(result, mask, 1e-5);
}

TEST_CASE("clique plus isolated vertices matches the exact oracle") {
    const Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const auto result = solver::solve_clique_relaxation(g);
    const auto exact = oracle::max_clique_exact(g);

    CHECK(result.converged);
    CHECK(result.candidate == exact.best_left);
    CHECK(result.candidate.members() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("strictly certified planted clique is recovered exactly") {
    const auto inst = gen::gen_clique_random(clique_params(64, 24, 0.25, 7));
    const auto certificate = cert::build_clique_certificate(
        inst.clique_graph(), inst.planted_left, cert::gamma_random(0.25));
    REQUIRE(cert::verify(certificate, inst, true).overall);

    const auto result = solver::solve_clique_relaxation(inst.clique_graph());
    CHECK(result.converged);
    CHECK(result.candidate == inst.planted_left);
    CHECK(result.rank_one_gap <= 1e-4);
    CHECK(oracle::matrix_rank(result.X, 1e-6) == 1);

    // The certificate pins the optimum at 1/n; the reported objective
    // must agree to tolerance from both sides.
    const double planted_objective = 1.0 / inst.planted_left.size();
    CHECK(result.objective <= planted_objective + 1e-5);
    CHECK(result.objective >= planted_objective - 1e-5);
}

TEST_CASE("solver feasibility and norm ordering on a noisy instance") {
    const auto inst = gen::gen_clique_random(clique_params(40, 10, 0.3, 21));
    solver::SolverConfig cfg;
    cfg.polish = false;
    const auto result = solver::solve_clique_relaxation(inst.clique_graph(), cfg);

    Eigen::MatrixXd mask = inst.clique_graph().adjacency_matrix();
    mask.diagonal().setOnes();
    if (result.converged) check_feasibility(result, mask, cfg.primal_tolerance);
    CHECK(linalg::nuclear_norm(result.X) >= linalg::spectral_norm(result.X) - 1e-10);
    CHECK(result.objective == doctest::Approx(linalg::nuclear_norm(result.X)).epsilon(1e-8));
}

TEST_CASE("merit rises are bounded by the splitting residuals") {
    const auto inst = gen::gen_clique_random(clique_params(30, 10, 0.2, 4));
    solver::SolverConfig cfg;
    cfg.track_merit = true;
    cfg.polish = false;
    const auto result = solver::solve_clique_relaxation(inst.clique_graph(), cfg);
    REQUIRE(result.converged);
    REQUIRE(result.merit_history.size() > 10);
    REQUIRE(result.merit_history.size() == result.primal_history.size());

    // Any increase of the objective between iterates is splitting
    // oscillation, so it cannot exceed the residual scale at that step.
    for (std::size_t k = 0; k + 1 < result.merit_history.size(); ++k) {
        const double rise = result.merit_history[k + 1] - result.merit_history[k];
        const double oscillation = result.primal_history[k] + result.dual_history[k];
        CHECK(rise <= 10.0 * oscillation + 1e-12);
    }
    // The last recorded merit is the reported objective.
    CHECK(std::abs(result.merit_history.back() - result.objective) <= 1e-12);
}

TEST_CASE("complete bipartite graph recovers both sides") {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) edges.emplace_back(i, j);
    const BipartiteGraph g(3, 3, edges);
    const auto result = solver::solve_biclique_relaxation(g);

    CHECK(result.converged);
    CHECK(result.candidate.members() == std::vector<int>{0, 1, 2});
    CHECK(result.candidate_right.members() == std::vector<int>{0, 1, 2});
    CHECK(result.rank_one_gap <= 1e-4);
}

TEST_CASE("planted biclique inside a larger empty host") {
    const auto inst = gen::make_biclique_instance(4, 5, 8, 10, {});
    const auto result = solver::solve_biclique_relaxation(inst.biclique_graph());
    const auto exact = oracle::max_edge_biclique_exact(inst.biclique_graph());

    CHECK(result.converged);
    CHECK(result.candidate == inst.planted_left);
    CHECK(result.candidate_right == inst.planted_right);
    CHECK(exact.best_left == inst.planted_left);
    CHECK(exact.best_right == inst.planted_right);
}

TEST_CASE("strictly certified adversarial biclique is recovered") {
    gen::AdversaryParams adv;
    adv.r = 19;
    adv.alpha = 0.5;
    adv.beta = 0.5;
    adv.seed = 3;
    const auto inst = gen::gen_biclique_adversarial(10, 10, 20, 20, adv);
    const auto certificate = cert::build_biclique_certificate(
        inst.biclique_graph(), inst.planted_left, inst.planted_right, cert::kGammaAdversarial);
    REQUIRE(cert::verify(certificate, inst, true).overall);

    const auto result = solver::solve_biclique_relaxation(inst.biclique_graph());
    CHECK(result.converged);
    CHECK(result.candidate == inst.planted_left);
    CHECK(result.candidate_right == inst.planted_right);
    CHECK(result.rank_one_gap <= 1e-4);
}

TEST_CASE("degenerate optimum reports failure instead of guessing") {
    // No edges at all: the optimum is any diagonal with unit sum, so the
    // top singular value has full multiplicity.
    const Graph g(3, {});
    const auto result = solver::solve_clique_relaxation(g);
    CHECK(result.degenerate);
    CHECK(result.candidate.empty());
}

TEST_CASE("internal proximal maps match the reference svt") {
    Rng rng(61);
    auto random_matrix = [&](int rows, int cols) {
        Eigen::MatrixXd a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a(i, j) = rng.gaussian();
        return a;
    };
    for (int rep = 0; rep < 10; ++rep) {
        const Eigen::MatrixXd a = random_matrix(9, 6 + rep % 7);
        for (double tau : {0.2, 1.0, 3.0}) {
            Eigen::MatrixXd fast;
            const double nuc = solver::detail::svt_rectangular_inplace(a, tau, fast);
            const Eigen::MatrixXd reference = linalg::svt(a, tau);
            CHECK((fast - reference).cwiseAbs().maxCoeff() <= 1e-10);
            CHECK(std::abs(nuc - linalg::nuclear_norm(reference)) <= 1e-9);
        }
        Eigen::MatrixXd sym = random_matrix(8, 8);
        sym = ((sym + sym.transpose()) / 2.0).eval();
        Eigen::MatrixXd fast;
        solver::detail::svt_symmetric_inplace(sym, 0.7, fast);
        CHECK((fast - linalg::svt(sym, 0.7)).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("solver input validation") {
    CHECK_THROWS_AS(solver::solve_biclique_relaxation(BipartiteGraph(3, 3, {})), InvalidInput);
    solver::SolverConfig bad;
    bad.max_iterations = 0;
    CHECK_THROWS_AS(solver::solve_clique_relaxation(complete_graph(3), bad), InvalidInput);
    bad = {};
    bad.rounding_threshold = 0.0;
    CHECK_THROWS_AS(solver::solve_clique_relaxation(complete_graph(3), bad), InvalidInput);
}
