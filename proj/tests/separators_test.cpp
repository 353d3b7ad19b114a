#include <doctest.h>

#include <cmath>

#include "depthlab/exact.hpp"
#include "depthlab/graph.hpp"
#include "depthlab/random.hpp"
#include "depthlab/separators.hpp"
#include "oracles.hpp"

using namespace depthlab;

namespace {

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);      // outer cycle
        edges.emplace_back(i, i + 5);            // spokes
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph::from_edges(10, edges);
}

}  // namespace

TEST_SUITE_BEGIN("separators");

TEST_CASE("balanced partition predicate") {
    Graph p7 = make_path(7);
    BalancedPartition part;
    part.k = 1;
    part.a = {0, 1};
    part.s = {2, 5};
    part.b = {3, 4, 6};
    CHECK(is_balanced_kpartition(p7, part));

    BalancedPartition wrong_k = part;
    wrong_k.k = 2;
    CHECK_FALSE(is_balanced_kpartition(p7, wrong_k));

    // K_7 never separates: any |S| = 3 leaves an A-B edge.
    Graph k7 = make_complete(7);
    BalancedPartition k7part;
    k7part.k = 2;
    k7part.a = {0, 1};
    k7part.s = {4, 5, 6};
    k7part.b = {2, 3};
    CHECK_FALSE(is_balanced_kpartition(k7, k7part));

    BalancedPartition overlap = part;
    overlap.b = {2, 3, 4, 6};
    CHECK_THROWS_AS(is_balanced_kpartition(p7, overlap), std::invalid_argument);
    BalancedPartition missing = part;
    missing.b = {3, 4};
    CHECK_THROWS_AS(is_balanced_kpartition(p7, missing), std::invalid_argument);
}

TEST_CASE("balanced partition search") {
    auto found = find_balanced_kpartition(make_path(7), 1);
    REQUIRE(found.has_value());
    CHECK(is_balanced_kpartition(make_path(7), *found));

    auto absent = find_balanced_kpartition(make_complete(7), 2);
    CHECK_FALSE(absent.has_value());
    CHECK(treewidth_exact(make_complete(7)).value == 6);

    CHECK_THROWS_AS(find_balanced_kpartition(make_path(16), 1, 15), std::invalid_argument);
}

TEST_CASE("balanced partitions vs the tree-width threshold") {
    // Lemma direction: tw <= k <= n-4 implies a partition exists; the
    // search is exhaustive so absence is a certificate.
    for (int i = 0; i < 100; ++i) {
        double p = 0.1 * (1 + i % 9);
        Graph g = sample_gnp(10, p, RandomSeed{4100 + static_cast<std::uint64_t>(i), 0});
        int tw = treewidth_exact(g).value;
        for (int k = 0; k <= 6; ++k) {
            auto part = find_balanced_kpartition(g, k);
            if (part) {
                CHECK(is_balanced_kpartition(g, *part));
            } else {
                CHECK(tw > k);
            }
            if (tw <= k) CHECK(part.has_value());
        }
    }
}

TEST_CASE("cheeger constant on small graphs") {
    auto k2 = cheeger_exact(Graph::from_edges(2, {{0, 1}}));
    CHECK(k2.num == 1);
    CHECK(k2.den == 1);
    CHECK(k2.witness.size() == 1);

    auto k4 = cheeger_exact(make_complete(4));
    CHECK(k4.value == doctest::Approx(2.0 / 3));
    CHECK(k4.num * 3 == k4.den * 2);

    auto c6 = cheeger_exact(make_cycle(6));
    CHECK(c6.value == doctest::Approx(1.0 / 3));

    CHECK_THROWS_AS(cheeger_exact(Graph::from_edges(4, {{0, 1}, {2, 3}})), std::invalid_argument);
    CHECK_THROWS_AS(cheeger_exact(make_path(30), 24), std::invalid_argument);
    CHECK_THROWS_AS(cheeger_exact(Graph::from_edges(1, {})), std::invalid_argument);
}

TEST_CASE("vertex expansion on small graphs") {
    CHECK(vertex_expansion_exact(make_complete(4)).value == doctest::Approx(1.0));
    CHECK(vertex_expansion_exact(make_path(3)).value == doctest::Approx(0.5));
    CHECK(vertex_expansion_exact(make_cycle(4)).value == doctest::Approx(1.0));
}

TEST_CASE("expansion minima match brute enumeration") {
    int tested = 0;
    for (int i = 0; tested < 25; ++i) {
        REQUIRE(i < 600);
        int n = 3 + i % 7;
        Graph g = sample_gnp(n, 0.5, RandomSeed{4200 + static_cast<std::uint64_t>(i), 0});
        if (connected_components(g).size() != 1) continue;
        ++tested;
        auto phi = cheeger_exact(g);
        auto phi_ref = oracle::brute_cheeger(g);
        CHECK(phi.num * phi_ref.den == phi.den * phi_ref.num);
        auto alpha = vertex_expansion_exact(g);
        auto alpha_ref = oracle::brute_vertex_expansion(g);
        CHECK(alpha.num * alpha_ref.den == alpha.den * alpha_ref.num);
    }
}

TEST_CASE("witnesses recompute to the reported minima") {
    int tested = 0;
    for (int i = 0; tested < 20; ++i) {
        REQUIRE(i < 600);
        int n = 4 + i % 6;
        Graph g = sample_gnp(n, 0.55, RandomSeed{4300 + static_cast<std::uint64_t>(i), 0});
        if (connected_components(g).size() != 1) continue;
        ++tested;
        auto phi = cheeger_exact(g);
        long long cut = 0, vol = 0;
        std::vector<char> in_x(n, 0);
        for (int v : phi.witness) in_x[v] = 1;
        for (int v : phi.witness) {
            vol += g.degree(v);
            for (int w : g.neighbors(v))
                if (!in_x[w]) ++cut;
        }
        CHECK(cut == phi.num);
        CHECK(vol == phi.den);

        auto alpha = vertex_expansion_exact(g);
        std::vector<char> in_y(n, 0);
        for (int v : alpha.witness) in_y[v] = 1;
        std::vector<char> seen(n, 0);
        long long outside = 0;
        for (int v : alpha.witness)
            for (int w : g.neighbors(v))
                if (!in_y[w] && !seen[w]) {
                    seen[w] = 1;
                    ++outside;
                }
        CHECK(outside == alpha.num);
        CHECK(static_cast<long long>(alpha.witness.size()) == alpha.den);
    }
}

TEST_CASE("alpha dominates phi on regular graphs") {
    for (int t = 0; t < 20; ++t) {
        Graph g = sample_regular(12, 3, RandomSeed{4400 + static_cast<std::uint64_t>(t), 0});
        if (connected_components(g).size() != 1) continue;
        auto phi = cheeger_exact(g);
        auto alpha = vertex_expansion_exact(g);
        CHECK(alpha.value >= phi.value - 1e-12);
    }
}

TEST_CASE("second eigenvalue by shifted power iteration") {
    auto k4 = lambda2_estimate(make_complete(4));
    CHECK(k4.lambda2 == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(k4.conductance_bound == doctest::Approx(2.0 / 3).epsilon(1e-6));
    CHECK(cheeger_exact(make_complete(4)).value == doctest::Approx(2.0 / 3));

    auto c4 = lambda2_estimate(make_cycle(4));
    CHECK(c4.lambda2 == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(c4.conductance_bound == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(cheeger_exact(make_cycle(4)).value == doctest::Approx(0.5));

    auto pet = lambda2_estimate(petersen());
    CHECK(pet.lambda2 == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(pet.conductance_bound == doctest::Approx(1.0 / 3).epsilon(1e-6));
    CHECK(pet.conductance_bound <= cheeger_exact(petersen()).value + 1e-9);

    auto k2 = lambda2_estimate(Graph::from_edges(2, {{0, 1}}));
    CHECK(k2.lambda2 == doctest::Approx(-1.0).epsilon(1e-6));

    CHECK_THROWS_AS(lambda2_estimate(make_path(4)), std::invalid_argument);
    CHECK_THROWS_AS(lambda2_estimate(Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}})),
                    std::invalid_argument);
}

TEST_CASE("spectral bound stays below the exact cheeger constant") {
    for (int t = 0; t < 20; ++t) {
        Graph g = sample_regular(12, 3, RandomSeed{4500 + static_cast<std::uint64_t>(t), 0});
        if (connected_components(g).size() != 1) continue;
        auto spectral = lambda2_estimate(g);
        auto phi = cheeger_exact(g);
        CHECK(spectral.conductance_bound <= phi.value + 1e-6);
    }
}

TEST_CASE("tree-width bound from expansion") {
    CHECK(tw_lower_from_expansion(0.0, 9) == 0);
    CHECK(tw_lower_from_expansion(1.0, 9) == 2);  // ceil(5/4)
    CHECK(tw_lower_from_expansion(1LL, 1LL, 9) == 2);
    CHECK(tw_lower_from_expansion(1LL, 2LL, 5) == 0);  // (4/2 - 3) <= 0
    CHECK(treewidth_exact(make_complete(9), 18).value == 8);

    for (int t = 0; t < 15; ++t) {
        Graph g = sample_regular(12, 3, RandomSeed{4600 + static_cast<std::uint64_t>(t), 0});
        if (connected_components(g).size() != 1) continue;
        auto alpha = vertex_expansion_exact(g);
        CHECK(tw_lower_from_expansion(alpha.num, alpha.den, 12) <= treewidth_exact(g).value);
    }
}

TEST_CASE("dense separator tail") {
    // Sign of the exponent flips exactly at the threshold f.
    for (double pn : {2.0, 5.0, 9.0}) {
        int n = 10;
        double p = pn / n;
        double f_star = 3.0 * std::sqrt(std::log(3.0) / (2.0 * p * n));
        CHECK(dense_separator_tail(n, p, f_star * 1.001).exponent < 0);
        CHECK(dense_separator_tail(n, p, f_star * 0.999).exponent > 0);
        CHECK(dense_separator_tail(n, p, f_star * 1.001).vanishing_regime);
        CHECK_FALSE(dense_separator_tail(n, p, f_star * 0.999).vanishing_regime);
    }

    // exp(10 ln 3 - 200/9): direct evaluation.
    auto tail = dense_separator_tail(10, 1.0, 1.0);
    CHECK(tail.value == doctest::Approx(1.3189e-5).epsilon(1e-3));

    // Once (2f^2/9) p n > ln 3, larger n only shrinks the bound.
    double prev = dense_separator_tail(20, 0.5, 1.0).value;
    for (int n : {24, 28, 32}) {
        double cur = dense_separator_tail(n, 0.5, 1.0).value;
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(dense_separator_tail(10, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(dense_separator_tail(10, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("sparse cut tail") {
    auto tail = sparse_cut_tail(100.0, 2.0, 1.0, 1.0, 0.01);
    CHECK(tail.beta == doctest::Approx(0.33));
    CHECK(tail.base < 1.0);
    CHECK(tail.base == doctest::Approx(0.5833).epsilon(1e-3));

    // The per-vertex base vanishes as gamma -> 0 (roughly like gamma^(1/3)
    // here, so the decay is visible but slow).
    double prev = 1.0;
    for (double gamma : {1e-2, 1e-4, 1e-6, 1e-8, 1e-12}) {
        double base = sparse_cut_tail(100.0, 2.0, 1.0, 1.0, gamma).base;
        CHECK(base < prev);
        prev = base;
    }
    CHECK(prev < 1e-3);

    CHECK_THROWS_AS(sparse_cut_tail(100.0, 2.0, 1.0, 1.0, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(sparse_cut_tail(100.0, 2.0, 1.0, 1.0, 0.0), std::invalid_argument);

    double gamma0 = sparse_gamma0(2.0, 1.0, 1.0);
    CHECK(gamma0 > 0.0);
    CHECK(gamma0 < 1.0 / 7.0);  // alpha*delta/(3c+alpha)
    CHECK(sparse_cut_tail(100.0, 2.0, 1.0, 1.0, gamma0).base < 1.0);

    CHECK(expansion_constant_explicit(1.0, 1.0, 2.0) ==
          doctest::Approx(1.0 / (9.0 * std::exp(3.0) * 4.0)));
    CHECK(expansion_constant_explicit(1.0, 1.0, 2.0) == doctest::Approx(0.00138296).epsilon(1e-4));
}

TEST_SUITE_END();
