#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nuclique/certificate.hpp"
#include "nuclique/errors.hpp"
#include "nuclique/generators.hpp"
#include "nuclique/graph.hpp"
#include "nuclique/linalg.hpp"
#include "nuclique/oracle.hpp"
#include "nuclique/rmt.hpp"
#include "nuclique/solver.hpp"
#include "nuclique/sweep.hpp"

namespace py = pybind11;
using namespace nuclique;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Planted clique / maximum-edge biclique recovery via nuclear-norm relaxation";

    py::register_exception<InvalidInput>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_RuntimeError);
    py::register_exception<CertificateInfeasible>(m, "CertificateInfeasibleError",
                                                  PyExc_RuntimeError);
    py::register_exception<SaturatedColumn>(m, "SaturatedColumnError", PyExc_RuntimeError);

    py::enum_<ProblemKind>(m, "ProblemKind")
        .value("CLIQUE", ProblemKind::Clique)
        .value("BICLIQUE", ProblemKind::Biclique);
    py::enum_<EdgeModel>(m, "EdgeModel")
        .value("NONE", EdgeModel::None)
        .value("RANDOM", EdgeModel::Random)
        .value("ADVERSARIAL", EdgeModel::Adversarial);

    py::class_<VertexSet>(m, "VertexSet")
        .def(py::init<std::vector<int>, int>(), py::arg("members"), py::arg("universe_size"))
        .def_property_readonly("members", &VertexSet::members)
        .def_property_readonly("universe_size", &VertexSet::universe_size)
        .def("characteristic_vector", &VertexSet::characteristic_vector)
        .def("__len__", &VertexSet::size)
        .def("__contains__", &VertexSet::contains)
        .def("__eq__", [](const VertexSet& a, const VertexSet& b) { return a == b; })
        .def("__repr__", [](const VertexSet& s) {
            std::string r = "VertexSet([";
            for (std::size_t i = 0; i < s.members().size(); ++i)
                r += (i ? ", " : "") + std::to_string(s.members()[i]);
            return r + "], " + std::to_string(s.universe_size()) + ")";
        });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("num_vertices"),
             py::arg("edges"))
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("edges", &Graph::edges)
        .def("has_edge", &Graph::has_edge)
        .def("adjacency_matrix", &Graph::adjacency_matrix);

    py::class_<BipartiteGraph>(m, "BipartiteGraph")
        .def(py::init<int, int, const std::vector<std::pair<int, int>>&>(),
             py::arg("left_count"), py::arg("right_count"), py::arg("edges"))
        .def_property_readonly("left_count", &BipartiteGraph::left_count)
        .def_property_readonly("right_count", &BipartiteGraph::right_count)
        .def_property_readonly("edges", &BipartiteGraph::edges)
        .def("has_edge", &BipartiteGraph::has_edge)
        .def("adjacency_matrix", &BipartiteGraph::adjacency_matrix);

    py::class_<GenerationParams>(m, "GenerationParams")
        .def_readonly("model", &GenerationParams::model)
        .def_readonly("p", &GenerationParams::p)
        .def_readonly("r", &GenerationParams::r)
        .def_readonly("alpha", &GenerationParams::alpha)
        .def_readonly("beta", &GenerationParams::beta)
        .def_readonly("seed", &GenerationParams::seed);

    py::class_<PlantedInstance>(m, "PlantedInstance")
        .def_readonly("kind", &PlantedInstance::kind)
        .def_readonly("planted_left", &PlantedInstance::planted_left)
        .def_readonly("planted_right", &PlantedInstance::planted_right)
        .def_readonly("params", &PlantedInstance::params)
        .def_property_readonly("graph",
                               [](const PlantedInstance& inst) { return inst.clique_graph(); })
        .def_property_readonly(
            "bigraph", [](const PlantedInstance& inst) { return inst.biclique_graph(); });

    m.def("clique_degree_to_planted", &clique_degree_to_planted);
    m.def("biclique_degrees", [](const BipartiteGraph& g, const VertexSet& u, const VertexSet& v) {
        const auto d = biclique_degrees(g, u, v);
        return py::make_tuple(d.p, d.q);
    });
    m.def("is_clique", &is_clique);
    m.def("is_biclique", &is_biclique);
    m.def("read_instance", &read_instance);
    m.def("write_instance", &write_instance);
    m.def("parse_instance", &parse_instance);
    m.def("format_instance", &format_instance);

    // generators
    py::class_<gen::RandomModelParams>(m, "RandomModelParams")
        .def(py::init([](int N, int n, int M, int m, double y, double z, double p,
                         std::uint64_t seed) {
                 gen::RandomModelParams params;
                 params.N = N;
                 params.n = n;
                 params.M = M;
                 params.m = m;
                 params.y = y;
                 params.z = z;
                 params.p = p;
                 params.seed = seed;
                 return params;
             }),
             py::arg("N"), py::arg("n"), py::arg("M") = 0, py::arg("m") = 0, py::arg("y") = 0.0,
             py::arg("z") = 0.0, py::arg("p") = 0.0, py::arg("seed") = 0);
    py::class_<gen::AdversaryParams>(m, "AdversaryParams")
        .def(py::init([](long long r, double alpha, double beta, std::uint64_t seed) {
                 return gen::AdversaryParams{r, alpha, beta, seed};
             }),
             py::arg("r"), py::arg("alpha") = 0.5, py::arg("beta") = 0.5, py::arg("seed") = 0);
    m.def("gen_clique_random", &gen::gen_clique_random);
    m.def("gen_biclique_random", &gen::gen_biclique_random);
    m.def("gen_clique_adversarial", &gen::gen_clique_adversarial, py::arg("n"), py::arg("N"),
          py::arg("adv"));
    m.def("gen_biclique_adversarial", &gen::gen_biclique_adversarial, py::arg("m"), py::arg("n"),
          py::arg("M"), py::arg("N"), py::arg("adv"));
    m.def("make_clique_instance", &gen::make_clique_instance);
    m.def("make_biclique_instance", &gen::make_biclique_instance);
    m.def("adversarial_screen", &gen::adversarial_screen, py::arg("m"), py::arg("n"), py::arg("r"),
          py::arg("alpha"), py::arg("beta"));

    // norms and matrix helpers
    m.def("nuclear_norm", &linalg::nuclear_norm);
    m.def("spectral_norm", &linalg::spectral_norm);
    m.def("frobenius_norm", &linalg::frobenius_norm);
    m.def("spectral_norm_power", &linalg::spectral_norm_power, py::arg("a"),
          py::arg("tol") = 1e-10, py::arg("max_iterations") = 20000);
    m.def("spectral_norm_gram", &linalg::spectral_norm_gram);
    m.def("svt", &linalg::svt);
    m.def("matrix_rank", &linalg::matrix_rank);

    // solver
    py::class_<solver::SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("max_iterations", &solver::SolverConfig::max_iterations)
        .def_readwrite("primal_tolerance", &solver::SolverConfig::primal_tolerance)
        .def_readwrite("dual_tolerance", &solver::SolverConfig::dual_tolerance)
        .def_readwrite("step_parameter", &solver::SolverConfig::step_parameter)
        .def_readwrite("rounding_threshold", &solver::SolverConfig::rounding_threshold)
        .def_readwrite("polish", &solver::SolverConfig::polish);
    py::class_<solver::SolverResult>(m, "SolverResult")
        .def_readonly("kind", &solver::SolverResult::kind)
        .def_readonly("X", &solver::SolverResult::X)
        .def_readonly("converged", &solver::SolverResult::converged)
        .def_readonly("iterations", &solver::SolverResult::iterations)
        .def_readonly("primal_residual", &solver::SolverResult::primal_residual)
        .def_readonly("dual_residual", &solver::SolverResult::dual_residual)
        .def_readonly("objective", &solver::SolverResult::objective)
        .def_readonly("rank_one_gap", &solver::SolverResult::rank_one_gap)
        .def_readonly("degenerate", &solver::SolverResult::degenerate)
        .def_readonly("candidate", &solver::SolverResult::candidate)
        .def_readonly("candidate_right", &solver::SolverResult::candidate_right)
        .def("scaled_to_unit_peak", &solver::SolverResult::scaled_to_unit_peak);
    m.def("solve_clique_relaxation", &solver::solve_clique_relaxation, py::arg("g"),
          py::arg("cfg") = solver::SolverConfig{});
    m.def("solve_biclique_relaxation", &solver::solve_biclique_relaxation, py::arg("g"),
          py::arg("cfg") = solver::SolverConfig{});

    // certificates
    py::class_<cert::Diagnostics>(m, "CertificateDiagnostics")
        .def_readonly("W_spectral", &cert::Diagnostics::W_spectral)
        .def_readonly("W_frobenius", &cert::Diagnostics::W_frobenius)
        .def_readonly("kkt_residual", &cert::Diagnostics::kkt_residual)
        .def_readonly("left_null_residual", &cert::Diagnostics::left_null_residual)
        .def_readonly("right_null_residual", &cert::Diagnostics::right_null_residual)
        .def_readonly("saturated_vertices", &cert::Diagnostics::saturated_vertices);
    py::class_<cert::Certificate>(m, "Certificate")
        .def_readonly("kind", &cert::Certificate::kind)
        .def_readonly("W", &cert::Certificate::W)
        .def_readonly("mu", &cert::Certificate::mu)
        .def_readonly("gamma", &cert::Certificate::gamma)
        .def_readonly("diagnostics", &cert::Certificate::diagnostics)
        .def_property_readonly("lambda_entries", [](const cert::Certificate& c) {
            std::vector<std::tuple<int, int, double>> out;
            out.reserve(c.lambda.size());
            for (const auto& e : c.lambda) out.emplace_back(e.i, e.j, e.value);
            return out;
        });
    py::class_<cert::VerificationReport>(m, "VerificationReport")
        .def_readonly("null_space_ok", &cert::VerificationReport::null_space_ok)
        .def_readonly("norm_ok", &cert::VerificationReport::norm_ok)
        .def_readonly("mu_positive", &cert::VerificationReport::mu_positive)
        .def_readonly("kkt_identity_ok", &cert::VerificationReport::kkt_identity_ok)
        .def_readonly("overall", &cert::VerificationReport::overall)
        .def_readonly("strict", &cert::VerificationReport::strict)
        .def_readonly("mu", &cert::VerificationReport::mu)
        .def_readonly("gamma", &cert::VerificationReport::gamma)
        .def_readonly("diagnostics", &cert::VerificationReport::diagnostics);
    m.def("gamma_random", &cert::gamma_random);
    m.def("build_clique_certificate", &cert::build_clique_certificate, py::arg("g"),
          py::arg("vstar"), py::arg("gamma"));
    m.def("build_biclique_certificate", &cert::build_biclique_certificate, py::arg("g"),
          py::arg("ustar"), py::arg("vstar"), py::arg("gamma"));
    m.def("verify",
          py::overload_cast<const cert::Certificate&, const PlantedInstance&, bool>(&cert::verify),
          py::arg("cert"), py::arg("instance"), py::arg("strict"));
    m.def("verify_clique",
          py::overload_cast<const cert::Certificate&, const Graph&, const VertexSet&, bool>(
              &cert::verify));
    m.def("verify_biclique",
          py::overload_cast<const cert::Certificate&, const BipartiteGraph&, const VertexSet&,
                            const VertexSet&, bool>(&cert::verify));
    m.def("clique_frobenius_screen", &cert::clique_frobenius_screen);
    py::class_<cert::SubspaceParts>(m, "SubspaceParts")
        .def_readonly("double_null", &cert::SubspaceParts::double_null)
        .def_readonly("outside_by_planted", &cert::SubspaceParts::outside_by_planted)
        .def_readonly("planted_by_outside", &cert::SubspaceParts::planted_by_outside)
        .def_readonly("planted_zero_sum", &cert::SubspaceParts::planted_zero_sum)
        .def_readonly("planted_scale", &cert::SubspaceParts::planted_scale)
        .def("part", &cert::SubspaceParts::part, py::return_value_policy::copy)
        .def("sum", &cert::SubspaceParts::sum);
    m.def("subspace_decompose", &cert::subspace_decompose);
    m.def("subgradient_check", &cert::subgradient_check, py::arg("xstar"), py::arg("phi"),
          py::arg("trials"), py::arg("seed") = 2024);

    // oracle
    py::class_<oracle::OracleResult>(m, "OracleResult")
        .def_readonly("best_left", &oracle::OracleResult::best_left)
        .def_readonly("best_right", &oracle::OracleResult::best_right)
        .def_readonly("objective", &oracle::OracleResult::objective)
        .def_readonly("nodes_explored", &oracle::OracleResult::nodes_explored);
    m.def("max_clique_exact", &oracle::max_clique_exact);
    m.def("max_edge_biclique_exact", &oracle::max_edge_biclique_exact);

    // random-matrix checks
    py::class_<rmt::OmegaParams>(m, "OmegaParams")
        .def(py::init<double>(), py::arg("p"))
        .def_readonly("p", &rmt::OmegaParams::p)
        .def_readonly("sigma_squared", &rmt::OmegaParams::sigma_squared);
    py::class_<rmt::TrialReport>(m, "TrialReport")
        .def_readonly("trials", &rmt::TrialReport::trials)
        .def_readonly("samples", &rmt::TrialReport::samples)
        .def_readonly("bound", &rmt::TrialReport::bound)
        .def_readonly("violation_count", &rmt::TrialReport::violation_count)
        .def_readonly("seed", &rmt::TrialReport::seed);
    m.def("sample_omega", &rmt::sample_omega);
    m.def("sample_omega_symmetric", &rmt::sample_omega_symmetric);
    m.def("recenter_columns", &rmt::recenter_columns);
    m.def("check_furedi_komlos", &rmt::check_furedi_komlos);
    m.def("check_geman", &rmt::check_geman);
    m.def("chernoff_bound", &rmt::chernoff_bound);
    m.def("chernoff_sqrt_bound", &rmt::chernoff_sqrt_bound);
    m.def("check_recentering_bound", &rmt::check_recentering_bound);
    py::class_<rmt::WitnessSplit>(m, "WitnessSplit")
        .def_readonly("kind", &rmt::WitnessSplit::kind)
        .def_readonly("w", &rmt::WitnessSplit::w)
        .def_readonly("spectral", &rmt::WitnessSplit::spectral)
        .def_readonly("frobenius", &rmt::WitnessSplit::frobenius)
        .def_property_readonly("parts", [](const rmt::WitnessSplit& s) {
            return std::vector<Eigen::MatrixXd>(s.parts.begin(), s.parts.end());
        });
    m.def("decompose_random_w", &rmt::decompose_random_W);

    // sweep harness
    py::class_<sweep::SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("problem", &sweep::SweepConfig::problem)
        .def_readwrite("mode", &sweep::SweepConfig::mode)
        .def_readwrite("N_values", &sweep::SweepConfig::N_values)
        .def_readwrite("n_values", &sweep::SweepConfig::n_values)
        .def_readwrite("c_values", &sweep::SweepConfig::c_values)
        .def_readwrite("p_values", &sweep::SweepConfig::p_values)
        .def_readwrite("r_values", &sweep::SweepConfig::r_values)
        .def_readwrite("alpha", &sweep::SweepConfig::alpha)
        .def_readwrite("beta", &sweep::SweepConfig::beta)
        .def_readwrite("y", &sweep::SweepConfig::y)
        .def_readwrite("z", &sweep::SweepConfig::z)
        .def_readwrite("trials_per_cell", &sweep::SweepConfig::trials_per_cell)
        .def_readwrite("base_seed", &sweep::SweepConfig::base_seed)
        .def_readwrite("workers", &sweep::SweepConfig::workers)
        .def_readwrite("solver", &sweep::SweepConfig::solver);
    py::class_<sweep::SweepRow>(m, "SweepRow")
        .def_readonly("problem", &sweep::SweepRow::problem)
        .def_readonly("N", &sweep::SweepRow::N)
        .def_readonly("M", &sweep::SweepRow::M)
        .def_readonly("n", &sweep::SweepRow::n)
        .def_readonly("m", &sweep::SweepRow::m)
        .def_readonly("p", &sweep::SweepRow::p)
        .def_readonly("r", &sweep::SweepRow::r)
        .def_readonly("alpha", &sweep::SweepRow::alpha)
        .def_readonly("beta", &sweep::SweepRow::beta)
        .def_readonly("c", &sweep::SweepRow::c)
        .def_readonly("trials", &sweep::SweepRow::trials)
        .def_readonly("recovered_fraction", &sweep::SweepRow::recovered_fraction)
        .def_readonly("cert_strict_fraction", &sweep::SweepRow::cert_strict_fraction)
        .def_readonly("mean_W_spectral", &sweep::SweepRow::mean_W_spectral)
        .def_readonly("mean_iterations", &sweep::SweepRow::mean_iterations)
        .def_readonly("mean_runtime_ms", &sweep::SweepRow::mean_runtime_ms)
        .def_readonly("strict_without_recovery", &sweep::SweepRow::strict_without_recovery);
    m.def("run_sweep", &sweep::run_sweep, py::call_guard<py::gil_scoped_release>());
    py::class_<sweep::AlphaEstimate>(m, "AlphaEstimate")
        .def_readonly("attained", &sweep::AlphaEstimate::attained)
        .def_readonly("c", &sweep::AlphaEstimate::c)
        .def_readonly("rows", &sweep::AlphaEstimate::rows);
    m.def("estimate_alpha", &sweep::estimate_alpha, py::call_guard<py::gil_scoped_release>());
    m.def("rows_to_csv", &sweep::rows_to_csv);
}
