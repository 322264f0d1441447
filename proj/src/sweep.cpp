#include "nuclique/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <thread>

#include "nuclique/certificate.hpp"
#include "nuclique/errors.hpp"
#include "nuclique/generators.hpp"

namespace nuclique::sweep {

namespace {

struct Cell {
    int N, M, n, m;
    double p, c;
    long long r;
};

struct TrialOutcome {
    bool recovered = false;
    bool cert_strict = false;
    bool has_witness = false;
    double w_spectral = 0.0;
    int iterations = 0;
    double runtime_ms = 0.0;
};

std::vector<Cell> expand_grid(const SweepConfig& cfg) {
    if (cfg.N_values.empty()) throw InvalidInput("sweep: empty N grid");
    if (cfg.n_values.empty() == cfg.c_values.empty())
        throw InvalidInput("sweep: exactly one of n values or c values must be given");
    if (cfg.trials_per_cell < 1) throw InvalidInput("sweep: trials_per_cell must be >= 1");
    const bool random_mode = cfg.mode == EdgeModel::Random;
    if (random_mode && cfg.p_values.empty()) throw InvalidInput("sweep: empty p grid");
    if (!random_mode && cfg.r_values.empty()) throw InvalidInput("sweep: empty r grid");

    std::vector<Cell> cells;
    for (int N : cfg.N_values) {
        std::vector<std::pair<int, double>> sizes;
        if (!cfg.n_values.empty()) {
            for (int n : cfg.n_values)
                sizes.emplace_back(n, n / std::sqrt(static_cast<double>(N)));
        } else {
            for (double c : cfg.c_values)
                sizes.emplace_back(static_cast<int>(std::ceil(c * std::sqrt(static_cast<double>(N)))), c);
        }
        for (auto [n, c] : sizes) {
            Cell cell;
            cell.N = N;
            cell.n = n;
            cell.c = c;
            if (cfg.problem == ProblemKind::Biclique) {
                cell.M = static_cast<int>(std::ceil(cfg.y * N));
                cell.m = static_cast<int>(std::ceil(cfg.z * n));
            } else {
                cell.M = N;
                cell.m = n;
            }
            if (random_mode) {
                cell.r = 0;
                for (double p : cfg.p_values) {
                    cell.p = p;
                    cells.push_back(cell);
                }
            } else {
                cell.p = 0.0;
                for (long long r : cfg.r_values) {
                    cell.r = r;
                    cells.push_back(cell);
                }
            }
        }
    }
    return cells;
}

TrialOutcome run_trial(const SweepConfig& cfg, const Cell& cell, std::uint64_t seed) {
    TrialOutcome out;

    PlantedInstance inst;
    if (cfg.mode == EdgeModel::Random) {
        gen::RandomModelParams params;
        params.N = cell.N;
        params.n = cell.n;
        params.M = cell.M;
        params.m = cell.m;
        params.p = cell.p;
        params.seed = seed;
        inst = cfg.problem == ProblemKind::Clique ? gen::gen_clique_random(params)
                                                  : gen::gen_biclique_random(params);
    } else {
        gen::AdversaryParams adv;
        adv.r = cell.r;
        adv.alpha = cfg.alpha;
        adv.beta = cfg.beta;
        adv.seed = seed;
        inst = cfg.problem == ProblemKind::Clique
                   ? gen::gen_clique_adversarial(cell.n, cell.N, adv)
                   : gen::gen_biclique_adversarial(cell.m, cell.n, cell.M, cell.N, adv);
    }

    const double gamma = cfg.mode == EdgeModel::Random ? cert::gamma_random(cell.p)
                                                       : cert::kGammaAdversarial;
    try {
        if (cfg.problem == ProblemKind::Clique) {
            const auto certificate =
                cert::build_clique_certificate(inst.clique_graph(), inst.planted_left, gamma);
            const auto report = cert::verify(certificate, inst, /*strict=*/true);
            out.cert_strict = report.overall;
            out.w_spectral = report.diagnostics.W_spectral;
        } else {
            const auto certificate = cert::build_biclique_certificate(
                inst.biclique_graph(), inst.planted_left, inst.planted_right, gamma);
            const auto report = cert::verify(certificate, inst, /*strict=*/true);
            out.cert_strict = report.overall;
            out.w_spectral = report.diagnostics.W_spectral;
        }
        out.has_witness = true;
    } catch (const CertificateInfeasible&) {
        out.cert_strict = false;
        out.has_witness = false;
    }

    const auto t0 = std::chrono::steady_clock::now();
    if (cfg.problem == ProblemKind::Clique) {
        const auto result = solver::solve_clique_relaxation(inst.clique_graph(), cfg.solver);
        out.iterations = result.iterations;
        out.recovered = !result.degenerate && result.candidate == inst.planted_left;
    } else {
        const auto result = solver::solve_biclique_relaxation(inst.biclique_graph(), cfg.solver);
        out.iterations = result.iterations;
        out.recovered = !result.degenerate && result.candidate == inst.planted_left &&
                        result.candidate_right == inst.planted_right;
    }
    out.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    const std::vector<Cell> cells = expand_grid(cfg);
    const int trials = cfg.trials_per_cell;
    const std::size_t total = cells.size() * static_cast<std::size_t>(trials);

    std::vector<TrialOutcome> outcomes(total);
    std::atomic<std::size_t> cursor{0};
    const int workers = std::max(1, cfg.workers);
    auto work = [&] {
        while (true) {
            const std::size_t k = cursor.fetch_add(1);
            if (k >= total) return;
            const Cell& cell = cells[k / static_cast<std::size_t>(trials)];
            // Per-trial seed = base_seed + global trial index.
            outcomes[k] = run_trial(cfg, cell, cfg.base_seed + static_cast<std::uint64_t>(k));
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::vector<SweepRow> rows;
    rows.reserve(cells.size());
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const Cell& cell = cells[ci];
        SweepRow row;
        row.problem = cfg.problem;
        row.N = cell.N;
        row.M = cell.M;
        row.n = cell.n;
        row.m = cell.m;
        row.p = cell.p;
        row.r = cell.r;
        row.alpha = cfg.mode == EdgeModel::Adversarial ? cfg.alpha : 0.0;
        row.beta = cfg.mode == EdgeModel::Adversarial ? cfg.beta : 0.0;
        row.c = cell.c;
        row.trials = trials;

        int recovered = 0, strict = 0, with_witness = 0;
        double spectral_sum = 0.0, iter_sum = 0.0, runtime_sum = 0.0;
        for (int t = 0; t < trials; ++t) {
            const TrialOutcome& out = outcomes[ci * static_cast<std::size_t>(trials) +
                                               static_cast<std::size_t>(t)];
            recovered += out.recovered ? 1 : 0;
            strict += out.cert_strict ? 1 : 0;
            if (out.cert_strict && !out.recovered) ++row.strict_without_recovery;
            if (out.has_witness) {
                ++with_witness;
                spectral_sum += out.w_spectral;
            }
            iter_sum += out.iterations;
            runtime_sum += out.runtime_ms;
        }
        row.recovered_fraction = static_cast<double>(recovered) / trials;
        row.cert_strict_fraction = static_cast<double>(strict) / trials;
        row.mean_W_spectral = with_witness > 0
                                  ? spectral_sum / with_witness
                                  : std::numeric_limits<double>::quiet_NaN();
        row.mean_iterations = iter_sum / trials;
        row.mean_runtime_ms = runtime_sum / trials;
        rows.push_back(row);
    }
    return rows;
}

AlphaEstimate estimate_alpha(const SweepConfig& cfg) {
    if (cfg.mode != EdgeModel::Random)
        throw InvalidInput("estimate_alpha: requires the random mode");
    if (cfg.c_values.empty())
        throw InvalidInput("estimate_alpha: requires a grid of c multipliers");

    AlphaEstimate estimate;
    estimate.rows = run_sweep(cfg);

    std::vector<double> sorted_c = cfg.c_values;
    std::sort(sorted_c.begin(), sorted_c.end());
    for (double c : sorted_c) {
        bool all_ok = true;
        for (const SweepRow& row : estimate.rows)
            if (row.c == c && row.recovered_fraction < 0.95) all_ok = false;
        if (all_ok) {
            estimate.attained = true;
            estimate.c = c;
            return estimate;
        }
    }
    return estimate;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "problem,N,M,n,m,p,r,alpha,beta,c,trials,recovered_fraction,"
           "cert_strict_fraction,mean_W_spectral,mean_iterations,mean_runtime_ms\n";
    char buf[512];
    for (const SweepRow& r : rows) {
        std::snprintf(buf, sizeof(buf),
                      "%s,%d,%d,%d,%d,%.10g,%lld,%.10g,%.10g,%.10g,%d,%.10g,%.10g,%.10g,%.10g,%.10g\n",
                      r.problem == ProblemKind::Clique ? "clique" : "biclique", r.N, r.M, r.n,
                      r.m, r.p, r.r, r.alpha, r.beta, r.c, r.trials, r.recovered_fraction,
                      r.cert_strict_fraction, r.mean_W_spectral, r.mean_iterations,
                      r.mean_runtime_ms);
        out << buf;
    }
    return out.str();
}

}  // namespace nuclique::sweep
