#include <doctest.h>

#include "blocksing/generate.hpp"
#include "blocksing/oracle.hpp"
#include "support.hpp"

using namespace blocksing;
using testing_support::cofactor_determinant;
using testing_support::drop_index;
using testing_support::gaussian_rank;

TEST_SUITE("oracle") {

TEST_CASE("small determinants") {
    CHECK(exact_determinant(adjacency_matrix(generate(family::Complete{2}))) == Rational(-1));
    const RationalMatrix k4 = adjacency_matrix(generate(family::Complete{4}));
    CHECK(cofactor_determinant(k4) == Rational(-3));
    CHECK(exact_determinant(k4) == Rational(-3));
    CHECK(exact_determinant(adjacency_matrix(generate(family::Fig2{}))).is_zero());
    CHECK(exact_determinant(RationalMatrix(0)) == Rational(1));
    CHECK(exact_determinant(adjacency_matrix(generate(family::Path{4}))) == Rational(1));
}

TEST_CASE("rank and nullity") {
    const RankReport zero = exact_rank_nullity(RationalMatrix(3));
    CHECK(zero.rank == 0);
    CHECK(zero.nullity == 3);
    CHECK(zero.det.is_zero());

    const RationalMatrix p3 = adjacency_matrix(generate(family::Path{3}));
    const RankReport r = exact_rank_nullity(p3);
    CHECK(r.rank == 2);
    CHECK(r.nullity == 1);
    // Largest nonsingular principal minor has order 2.
    CHECK(cofactor_determinant(p3).is_zero());
    CHECK_FALSE(cofactor_determinant(drop_index(p3, 2)).is_zero());

    const RankReport fig1 = exact_rank_nullity(adjacency_matrix(generate(family::Fig1{})));
    CHECK(fig1.nullity == 0);
    CHECK_FALSE(fig1.det.is_zero());

    const RankReport fig2 = exact_rank_nullity(adjacency_matrix(generate(family::Fig2{})));
    CHECK(fig2.nullity >= 1);
    CHECK(fig2.det.is_zero());
}

TEST_CASE("determinant agrees with cofactor expansion") {
    SplitMix64 rng(51);
    for (int i = 0; i < 600; ++i) {
        const RationalMatrix m = testing_support::random_matrix(rng, rng.uniform(0, 5));
        const RankReport r = exact_rank_nullity(m);
        CHECK(exact_determinant(m) == cofactor_determinant(m));
        CHECK(r.det == cofactor_determinant(m));
        CHECK(r.rank + r.nullity == m.order());
        CHECK(r.rank == gaussian_rank(m));
        CHECK(r.det.is_zero() == (r.nullity > 0));
    }
}

TEST_CASE("rank agrees with rational Gaussian elimination on larger matrices") {
    SplitMix64 rng(52);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = rng.uniform(1, 14);
        RationalMatrix m = testing_support::random_matrix(rng, n);
        // Force rank deficiency half of the time by duplicating a combination of rows.
        if (i % 2 == 0 && n >= 2) {
            for (std::size_t c = 0; c < n; ++c) {
                m(n - 1, c) = m(0, c) * Rational(2) - m(1, c);
            }
        }
        CHECK(exact_rank_nullity(m).rank == gaussian_rank(m));
    }
}

TEST_CASE("subtracting one row from another keeps the determinant") {
    SplitMix64 rng(53);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = rng.uniform(2, 9);
        RationalMatrix m = testing_support::random_matrix(rng, n);
        const Rational before = exact_determinant(m);
        const std::size_t from = rng.uniform(0, n - 1);
        std::size_t to = rng.uniform(0, n - 2);
        to += to >= from ? 1 : 0;
        for (std::size_t c = 0; c < n; ++c) {
            m(to, c) -= m(from, c);
        }
        CHECK(exact_determinant(m) == before);
    }
    // The clique argument: subtracting row 1 from the rest of J - D.
    const std::vector<Rational> w{Rational(2), Rational(-1, 3), Rational(5, 7)};
    RationalMatrix clique = testing_support::clique_matrix(w);
    const Rational det = exact_determinant(clique);
    for (std::size_t r = 1; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            clique(r, c) -= clique(0, c);
        }
    }
    CHECK(exact_determinant(clique) == det);
}

TEST_CASE("rank does not depend on vertex labels") {
    SplitMix64 rng(54);
    for (int i = 0; i < 100; ++i) {
        const Graph g = testing_support::random_graph(rng, rng.uniform(1, 12));
        const LoopWeights loops = testing_support::random_loops(rng, g.vertex_count());
        const auto [h, relabelled] =
            testing_support::relabel(g, loops, testing_support::random_permutation(rng, g.vertex_count()));
        const RankReport a = exact_rank_nullity(adjacency_matrix(g, loops));
        const RankReport b = exact_rank_nullity(adjacency_matrix(h, relabelled));
        CHECK(a.rank == b.rank);
        CHECK(a.nullity == b.nullity);
        CHECK(a.det == b.det);
    }
}

TEST_CASE("coalescence") {
    const Graph k2 = generate(family::Complete{2});
    const Coalescence p3 = coalesce(k2, {}, 2, k2, {}, 1, Rational(0));
    CHECK(p3.graph.vertex_count() == 3);
    CHECK(p3.graph.sorted_edges() == std::vector<Edge>{{1, 2}, {2, 3}});
    CHECK(p3.merged == 2);
    CHECK(exact_determinant(adjacency_matrix(p3.graph, p3.loops)).is_zero());
    CHECK(coalescence_identity_holds(k2, {}, 2, k2, {}, 1, Rational(0)));

    const Graph k4 = generate(family::Complete{4});
    const Graph k3 = generate(family::Complete{3});
    const Coalescence glued = coalesce(k4, {}, 1, k3, {}, 1, Rational(0));
    CHECK(glued.graph.vertex_count() == 6);
    CHECK(glued.graph.edge_count() == 9);
    // det(K4 glued to K3) by the identity: det(K4) det(K2) + det(K3) det(K3) with alpha = 0.
    CHECK(exact_determinant(adjacency_matrix(glued.graph, glued.loops)) ==
          Rational(-3) * Rational(-1) + Rational(2) * Rational(2));
    CHECK(coalescence_identity_holds(k4, {}, 1, k3, {}, 1, Rational(0)));

    LoopWeights w1;
    w1.set(1, Rational(5));
    const Coalescence weighted = coalesce(k2, w1, 1, k3, {}, 2, Rational(-1, 2));
    CHECK(weighted.loops.get(weighted.merged) == Rational(-1, 2));
    CHECK_THROWS_AS(coalesce(k2, {}, 3, k3, {}, 1, Rational(0)), std::out_of_range);
}

TEST_CASE("coalescence identity on random weighted graphs") {
    SplitMix64 rng(55);
    for (int i = 0; i < 100; ++i) {
        const Graph g1 = testing_support::random_graph(rng, rng.uniform(1, 6));
        const Graph g2 = testing_support::random_graph(rng, rng.uniform(1, 6));
        const LoopWeights w1 = testing_support::random_loops(rng, g1.vertex_count());
        const LoopWeights w2 = testing_support::random_loops(rng, g2.vertex_count());
        const auto v1 = static_cast<Vertex>(rng.uniform(1, g1.vertex_count()));
        const auto v2 = static_cast<Vertex>(rng.uniform(1, g2.vertex_count()));
        const Rational alpha = testing_support::random_rational(rng);
        CHECK(coalescence_identity_holds(g1, w1, v1, g2, w2, v2, alpha));
    }
}

TEST_CASE("tree perfect matchings") {
    CHECK(tree_has_perfect_matching(generate(family::Path{2})));
    CHECK_FALSE(tree_has_perfect_matching(generate(family::Path{3})));
    CHECK(tree_has_perfect_matching(generate(family::Path{4})));
    CHECK_FALSE(tree_has_perfect_matching(generate(family::Star{4})));
    CHECK_THROWS_AS(tree_has_perfect_matching(generate(family::Complete{3})), std::invalid_argument);
    CHECK_THROWS_AS(tree_has_perfect_matching(Graph(4, {{1, 2}, {3, 4}})), std::invalid_argument);
    for (std::size_t n = 1; n <= 7; ++n) {
        auto trees = enumerate_labeled_trees(n);
        while (const auto t = trees.next()) {
            CHECK(tree_has_perfect_matching(*t) == !exact_determinant(adjacency_matrix(*t)).is_zero());
        }
    }
    SplitMix64 rng(56);
    for (int i = 0; i < 200; ++i) {
        const Graph t = generate(family::RandomTree{rng.uniform(9, 12), rng.next()});
        CHECK(tree_has_perfect_matching(t) == (gaussian_rank(adjacency_matrix(t)) == t.vertex_count()));
    }
}

TEST_CASE("stars are singular unless they are a single edge") {
    for (std::size_t n = 1; n <= 12; ++n) {
        CHECK(exact_determinant(adjacency_matrix(generate(family::Star{n}))).is_zero() == (n != 2));
    }
}

}  // TEST_SUITE
