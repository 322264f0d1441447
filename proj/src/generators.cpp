#include "nuclique/generators.hpp"

#include <cmath>

#include "nuclique/errors.hpp"
#include "nuclique/rng.hpp"

namespace nuclique::gen {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p < 1.0)) throw InvalidInput("edge probability must be in [0, 1)");
}

void check_caps(double alpha, double beta) {
    if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0))
        throw InvalidInput("alpha and beta must be in (0, 1)");
}

struct ResolvedBicliqueSizes {
    int M, m;
};

ResolvedBicliqueSizes resolve_biclique_sizes(const RandomModelParams& params) {
    int M = params.M, m = params.m;
    if (params.y > 0.0) M = static_cast<int>(std::ceil(params.y * params.N));
    if (params.z > 0.0) m = static_cast<int>(std::ceil(params.z * params.n));
    return {M, m};
}

}  // namespace

PlantedInstance gen_clique_random(const RandomModelParams& params) {
    check_probability(params.p);
    const int N = params.N, n = params.n;
    if (n < 0 || N < 0 || n > N) throw InvalidInput("gen_clique_random: need 0 <= n <= N");

    Rng rng(params.seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            const bool planted = i < n && j < n;
            if (planted || rng.bernoulli(params.p)) edges.emplace_back(i, j);
        }
    }

    PlantedInstance inst;
    inst.kind = ProblemKind::Clique;
    inst.graph = Graph(N, edges);
    inst.planted_left = VertexSet::range(n, N);
    inst.planted_right = VertexSet({}, 0);
    inst.params = {EdgeModel::Random, params.p, 0, 0.0, 0.0, 0.0, 0.0, params.seed};
    return inst;
}

PlantedInstance gen_biclique_random(const RandomModelParams& params) {
    check_probability(params.p);
    const auto [M, m] = resolve_biclique_sizes(params);
    const int N = params.N, n = params.n;
    if (m < 0 || n < 0 || m > M || n > N)
        throw InvalidInput("gen_biclique_random: need 0 <= m <= M and 0 <= n <= N");

    Rng rng(params.seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < M; ++i) {
        for (int j = 0; j < N; ++j) {
            const bool planted = i < m && j < n;
            if (planted || rng.bernoulli(params.p)) edges.emplace_back(i, j);
        }
    }

    PlantedInstance inst;
    inst.kind = ProblemKind::Biclique;
    inst.bigraph = BipartiteGraph(M, N, edges);
    inst.planted_left = VertexSet::range(m, M);
    inst.planted_right = VertexSet::range(n, N);
    inst.params = {EdgeModel::Random, params.p, 0, 0.0, 0.0, params.y, params.z, params.seed};
    return inst;
}

PlantedInstance gen_biclique_adversarial(int m, int n, int M, int N,
                                         const AdversaryParams& adv) {
    check_caps(adv.alpha, adv.beta);
    if (m < 0 || n < 0 || m > M || n > N)
        throw InvalidInput("gen_biclique_adversarial: need 0 <= m <= M and 0 <= n <= N");
    if (adv.r < 0) throw InvalidInput("gen_biclique_adversarial: negative budget");

    const long long cap_into_planted_right = static_cast<long long>(adv.beta * n);
    const long long cap_into_planted_left = static_cast<long long>(adv.alpha * m);
    const long long cross_capacity = static_cast<long long>(M - m) * cap_into_planted_right +
                                     static_cast<long long>(N - n) * cap_into_planted_left;
    const long long outside_capacity = static_cast<long long>(M - m) * (N - n);
    if (adv.r > cross_capacity + outside_capacity)
        throw InvalidInput("gen_biclique_adversarial: budget r exceeds capped capacity");

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, j);

    Rng rng(adv.seed);
    std::vector<std::pair<int, int>> cross, outside;
    for (int i = m; i < M; ++i)
        for (int j = 0; j < n; ++j) cross.emplace_back(i, j);
    for (int j = n; j < N; ++j)
        for (int i = 0; i < m; ++i) cross.emplace_back(i, j);
    for (int i = m; i < M; ++i)
        for (int j = n; j < N; ++j) outside.emplace_back(i, j);
    rng.shuffle(cross);
    rng.shuffle(outside);

    std::vector<long long> left_used(static_cast<std::size_t>(M), 0);
    std::vector<long long> right_used(static_cast<std::size_t>(N), 0);
    long long placed = 0;
    for (auto [i, j] : cross) {
        if (placed == adv.r) break;
        if (i >= m) {  // outside-left vertex gaining an edge into V*
            if (left_used[static_cast<std::size_t>(i)] == cap_into_planted_right) continue;
            ++left_used[static_cast<std::size_t>(i)];
        } else {  // outside-right vertex gaining an edge into U*
            if (right_used[static_cast<std::size_t>(j)] == cap_into_planted_left) continue;
            ++right_used[static_cast<std::size_t>(j)];
        }
        edges.emplace_back(i, j);
        ++placed;
    }
    for (auto [i, j] : outside) {
        if (placed == adv.r) break;
        edges.emplace_back(i, j);
        ++placed;
    }

    PlantedInstance inst;
    inst.kind = ProblemKind::Biclique;
    inst.bigraph = BipartiteGraph(M, N, edges);
    inst.planted_left = VertexSet::range(m, M);
    inst.planted_right = VertexSet::range(n, N);
    inst.params = {EdgeModel::Adversarial, 0.0, adv.r, adv.alpha, adv.beta, 0.0, 0.0, adv.seed};
    return inst;
}

PlantedInstance gen_clique_adversarial(int n, int N, const AdversaryParams& adv) {
    check_caps(adv.alpha, adv.beta);
    if (n < 0 || n > N) throw InvalidInput("gen_clique_adversarial: need 0 <= n <= N");
    if (adv.r < 0) throw InvalidInput("gen_clique_adversarial: negative budget");

    const long long cap_into_planted = static_cast<long long>(adv.beta * n);
    const long long outside = N - n;
    const long long capacity =
        outside * cap_into_planted + outside * (outside - 1) / 2;
    if (adv.r > capacity)
        throw InvalidInput("gen_clique_adversarial: budget r exceeds capped capacity");

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);

    Rng rng(adv.seed);
    std::vector<std::pair<int, int>> cross, outside_pairs;
    for (int j = n; j < N; ++j)
        for (int i = 0; i < n; ++i) cross.emplace_back(i, j);
    for (int i = n; i < N; ++i)
        for (int j = i + 1; j < N; ++j) outside_pairs.emplace_back(i, j);
    rng.shuffle(cross);
    rng.shuffle(outside_pairs);

    std::vector<long long> used(static_cast<std::size_t>(N), 0);
    long long placed = 0;
    for (auto [i, j] : cross) {
        if (placed == adv.r) break;
        if (used[static_cast<std::size_t>(j)] == cap_into_planted) continue;
        ++used[static_cast<std::size_t>(j)];
        edges.emplace_back(i, j);
        ++placed;
    }
    for (auto [i, j] : outside_pairs) {
        if (placed == adv.r) break;
        edges.emplace_back(i, j);
        ++placed;
    }

    PlantedInstance inst;
    inst.kind = ProblemKind::Clique;
    inst.graph = Graph(N, edges);
    inst.planted_left = VertexSet::range(n, N);
    inst.planted_right = VertexSet({}, 0);
    inst.params = {EdgeModel::Adversarial, 0.0, adv.r, adv.alpha, adv.beta, 0.0, 0.0, adv.seed};
    return inst;
}

PlantedInstance make_clique_instance(int n, int N,
                                     const std::vector<std::pair<int, int>>& extra_edges) {
    if (n < 0 || n > N) throw InvalidInput("make_clique_instance: need 0 <= n <= N");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    for (auto [i, j] : extra_edges) {
        if (i >= 0 && j >= 0 && i < n && j < n)
            throw InvalidInput("make_clique_instance: extra edge inside the planted block");
        edges.emplace_back(i, j);
    }
    PlantedInstance inst;
    inst.kind = ProblemKind::Clique;
    inst.graph = Graph(N, edges);
    inst.planted_left = VertexSet::range(n, N);
    inst.planted_right = VertexSet({}, 0);
    inst.params.model = EdgeModel::Adversarial;
    inst.params.r = static_cast<long long>(extra_edges.size());
    return inst;
}

PlantedInstance make_biclique_instance(int m, int n, int M, int N,
                                       const std::vector<std::pair<int, int>>& extra_edges) {
    if (m < 0 || n < 0 || m > M || n > N)
        throw InvalidInput("make_biclique_instance: need 0 <= m <= M and 0 <= n <= N");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, j);
    for (auto [i, j] : extra_edges) {
        if (i >= 0 && j >= 0 && i < m && j < n)
            throw InvalidInput("make_biclique_instance: extra edge inside the planted block");
        edges.emplace_back(i, j);
    }
    PlantedInstance inst;
    inst.kind = ProblemKind::Biclique;
    inst.bigraph = BipartiteGraph(M, N, edges);
    inst.planted_left = VertexSet::range(m, M);
    inst.planted_right = VertexSet::range(n, N);
    inst.params.model = EdgeModel::Adversarial;
    inst.params.r = static_cast<long long>(extra_edges.size());
    return inst;
}

bool adversarial_screen(int m, int n, long long r, double alpha, double beta) {
    check_caps(alpha, beta);
    const double budget = static_cast<double>(r) *
                          (1.0 + 1.0 / (1.0 - alpha) + 1.0 / (1.0 - beta));
    return budget < static_cast<double>(m) * static_cast<double>(n);
}

}  // namespace nuclique::gen
