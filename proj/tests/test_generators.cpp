#include <doctest.h>

#include <cmath>

#include "nuclique/errors.hpp"
#include "nuclique/generators.hpp"
#include "nuclique/graph.hpp"

using namespace nuclique;

namespace {

gen::RandomModelParams clique_params(int N, int n, double p, std::uint64_t seed) {
    gen::RandomModelParams params;
    params.N = N;
    params.n = n;
    params.p = p;
    params.seed = seed;
    return params;
}

long long choose2(long long k) { return k * (k - 1) / 2; }

}  // namespace

TEST_CASE("random clique generator, p = 0") {
    const auto inst = gen::gen_clique_random(clique_params(10, 4, 0.0, 1));
    CHECK(inst.clique_graph().num_edges() == 6);  // exactly the planted K4
    CHECK(is_clique(inst.clique_graph(), inst.planted_left));
    CHECK(inst.planted_left.members() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("random clique generator, planted set is everything") {
    const auto inst = gen::gen_clique_random(clique_params(10, 10, 0.7, 3));
    CHECK(static_cast<long long>(inst.clique_graph().num_edges()) == choose2(10));
}

TEST_CASE("random clique generator matches the binomial count") {
    const int N = 200, n = 20;
    const auto inst = gen::gen_clique_random(clique_params(N, n, 0.5, 42));
    const long long slots = choose2(N) - choose2(n);
    const double mean = 0.5 * static_cast<double>(slots);
    const double sigma = std::sqrt(static_cast<double>(slots) * 0.25);
    const auto extra =
        static_cast<double>(inst.clique_graph().num_edges()) - static_cast<double>(choose2(n));
    CHECK(std::abs(extra - mean) <= 3.0 * sigma);
    CHECK(is_clique(inst.clique_graph(), inst.planted_left));
}

TEST_CASE("same seed gives byte-identical instances") {
    const auto a = gen::gen_clique_random(clique_params(60, 10, 0.3, 9));
    const auto b = gen::gen_clique_random(clique_params(60, 10, 0.3, 9));
    const auto c = gen::gen_clique_random(clique_params(60, 10, 0.3, 10));
    CHECK(format_instance(a) == format_instance(b));
    CHECK(format_instance(a) != format_instance(c));
}

TEST_CASE("random biclique generator") {
    gen::RandomModelParams params;
    params.N = 6;
    params.n = 3;
    params.M = 6;
    params.m = 3;
    params.p = 0.0;
    params.seed = 5;
    const auto inst = gen::gen_biclique_random(params);
    CHECK(inst.biclique_graph().num_edges() == 9);
    CHECK(is_biclique(inst.biclique_graph(), inst.planted_left, inst.planted_right));

    params.p = 0.99;
    const auto dense = gen::gen_biclique_random(params);
    CHECK(is_biclique(dense.biclique_graph(), dense.planted_left, dense.planted_right));

    params.N = 100;
    params.n = 10;
    params.M = 120;
    params.m = 12;
    params.p = 0.3;
    params.seed = 77;
    const auto big = gen::gen_biclique_random(params);
    const long long slots = 120LL * 100 - 12LL * 10;
    const double mean = 0.3 * static_cast<double>(slots);
    const double sigma = std::sqrt(static_cast<double>(slots) * 0.3 * 0.7);
    const double extra = static_cast<double>(big.biclique_graph().num_edges()) - 120.0;
    CHECK(std::abs(extra - mean) <= 3.0 * sigma);
}

TEST_CASE("biclique sizing from aspect ratios") {
    gen::RandomModelParams params;
    params.N = 10;
    params.n = 4;
    params.y = 1.5;
    params.z = 0.6;
    params.p = 0.0;
    const auto inst = gen::gen_biclique_random(params);
    CHECK(inst.biclique_graph().left_count() == 15);   // ceil(1.5 * 10)
    CHECK(inst.planted_left.size() == 3);              // ceil(0.6 * 4)
}

TEST_CASE("adversarial biclique generator respects budget and caps") {
    gen::AdversaryParams adv;
    adv.alpha = 0.9;
    adv.beta = 0.9;
    adv.seed = 4;

    adv.r = 0;
    auto inst = gen::gen_biclique_adversarial(10, 10, 20, 20, adv);
    CHECK(inst.biclique_graph().num_edges() == 100);

    adv.r = 1;
    inst = gen::gen_biclique_adversarial(10, 10, 20, 20, adv);
    CHECK(inst.biclique_graph().num_edges() == 101);

    adv.r = 19;
    adv.alpha = 0.5;
    adv.beta = 0.5;
    inst = gen::gen_biclique_adversarial(10, 10, 20, 20, adv);
    CHECK(inst.biclique_graph().num_edges() == 119);
    CHECK(gen::adversarial_screen(10, 10, 19, 0.5, 0.5));
    const auto deg =
        biclique_degrees(inst.biclique_graph(), inst.planted_left, inst.planted_right);
    for (int i = 10; i < 20; ++i) CHECK(deg.p[static_cast<std::size_t>(i)] <= 5);
    for (int j = 10; j < 20; ++j) CHECK(deg.q[static_cast<std::size_t>(j)] <= 5);
    CHECK(is_biclique(inst.biclique_graph(), inst.planted_left, inst.planted_right));

    // Budget beyond the capped capacity is an error, not a truncation.
    adv.r = 10 * 5 + 10 * 5 + 100 + 1;
    CHECK_THROWS_AS(gen::gen_biclique_adversarial(10, 10, 20, 20, adv), InvalidInput);
}

TEST_CASE("adversarial clique generator respects budget and caps") {
    gen::AdversaryParams adv;
    adv.alpha = 0.5;
    adv.beta = 0.5;
    adv.seed = 8;

    adv.r = 0;
    auto inst = gen::gen_clique_adversarial(10, 25, adv);
    CHECK(static_cast<long long>(inst.clique_graph().num_edges()) == choose2(10));

    adv.r = 40;
    inst = gen::gen_clique_adversarial(10, 25, adv);
    CHECK(static_cast<long long>(inst.clique_graph().num_edges()) == choose2(10) + 40);
    for (int j = 10; j < 25; ++j)
        CHECK(clique_degree_to_planted(inst.clique_graph(), inst.planted_left, j) <= 5);
    CHECK(is_clique(inst.clique_graph(), inst.planted_left));

    adv.r = 15 * 5 + choose2(15) + 1;
    CHECK_THROWS_AS(gen::gen_clique_adversarial(10, 25, adv), InvalidInput);
}

TEST_CASE("adversarial generators are seed deterministic") {
    gen::AdversaryParams adv;
    adv.r = 12;
    adv.seed = 21;
    const auto a = gen::gen_biclique_adversarial(6, 6, 12, 12, adv);
    const auto b = gen::gen_biclique_adversarial(6, 6, 12, 12, adv);
    CHECK(format_instance(a) == format_instance(b));
}

TEST_CASE("adversarial screen arithmetic") {
    CHECK(gen::adversarial_screen(10, 10, 19, 0.5, 0.5));        // 95 < 100
    CHECK_FALSE(gen::adversarial_screen(10, 10, 20, 0.5, 0.5));  // 100 is not < 100
    CHECK_FALSE(gen::adversarial_screen(4, 9, 11, 0.5, 2.0 / 3.0));
    CHECK_THROWS_AS(gen::adversarial_screen(4, 9, 1, 0.0, 0.5), InvalidInput);
}

TEST_CASE("explicit diversionary edge lists") {
    const auto inst = gen::make_clique_instance(3, 6, {{0, 4}, {4, 5}});
    CHECK(inst.clique_graph().num_edges() == 5);
    CHECK_THROWS_AS(gen::make_clique_instance(3, 6, {{0, 1}}), InvalidInput);

    const auto binst = gen::make_biclique_instance(2, 2, 4, 4, {{3, 3}});
    CHECK(binst.biclique_graph().num_edges() == 5);
    CHECK_THROWS_AS(gen::make_biclique_instance(2, 2, 4, 4, {{1, 1}}), InvalidInput);
}

TEST_CASE("generator input validation") {
    CHECK_THROWS_AS(gen::gen_clique_random(clique_params(5, 6, 0.0, 0)), InvalidInput);
    CHECK_THROWS_AS(gen::gen_clique_random(clique_params(5, 2, 1.0, 0)), InvalidInput);
    CHECK_THROWS_AS(gen::gen_clique_random(clique_params(5, 2, -0.1, 0)), InvalidInput);
}
