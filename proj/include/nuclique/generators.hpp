#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nuclique/graph.hpp"

namespace nuclique::gen {

/// Sizing and edge probability for the random diversionary-edge model.
/// For bicliques either (M, m) are given directly or derived from the
/// aspect ratios: M = ceil(y*N), m = ceil(z*n) when y, z > 0.
struct RandomModelParams {
    int N = 0;
    int n = 0;
    int M = 0;  // biclique only
    int m = 0;  // biclique only
    double y = 0.0;
    double z = 0.0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// Budget and per-vertex caps for the adversarial model. alpha caps the
/// adjacency of outside right vertices into the planted left side, beta
/// the adjacency of outside left (resp. outside clique) vertices into
/// the planted right side.
struct AdversaryParams {
    long long r = 0;
    double alpha = 0.5;
    double beta = 0.5;
    std::uint64_t seed = 0;
};

/// Planted complete subgraph on the lowest indices; every other vertex
/// pair becomes an edge independently with probability p.
PlantedInstance gen_clique_random(const RandomModelParams& params);
PlantedInstance gen_biclique_random(const RandomModelParams& params);

/// Planted structure plus exactly r diversionary edges placed by a
/// seeded greedy adversary that fills cross slots (edges touching the
/// planted side) before outside-outside slots, never exceeding the
/// per-vertex caps floor(alpha*m) / floor(beta*n). Throws InvalidInput
/// if r exceeds the capped capacity.
PlantedInstance gen_biclique_adversarial(int m, int n, int M, int N,
                                         const AdversaryParams& adv);
PlantedInstance gen_clique_adversarial(int n, int N, const AdversaryParams& adv);

/// Planted structure plus a caller-chosen diversionary edge list
/// (worst-case probes). Edges inside the planted block are rejected.
PlantedInstance make_clique_instance(int n, int N,
                                     const std::vector<std::pair<int, int>>& extra_edges);
PlantedInstance make_biclique_instance(int m, int n, int M, int N,
                                       const std::vector<std::pair<int, int>>& extra_edges);

/// Closed-form sufficient condition for guaranteed biclique recovery
/// under the adversarial budget: r * (1 + 1/(1-alpha) + 1/(1-beta)) < m*n.
bool adversarial_screen(int m, int n, long long r, double alpha, double beta);

}  // namespace nuclique::gen
