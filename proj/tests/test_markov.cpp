#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace mutkit;
using namespace testsup;

TEST_CASE("markov triples and children") {
    CHECK_THROWS_AS(MarkovTriple(1, 1, 3), Error);
    CHECK(MarkovTriple(2, 1, 1) == MarkovTriple(1, 1, 2));  // sorted on construction

    CHECK(markov_children(MarkovTriple(1, 1, 1)) ==
          std::vector<MarkovTriple>{MarkovTriple(1, 1, 2)});
    CHECK(markov_children(MarkovTriple(1, 1, 2)) ==
          std::vector<MarkovTriple>{MarkovTriple(1, 2, 5)});
    CHECK(markov_parent(MarkovTriple(1, 1, 2)) == MarkovTriple(1, 1, 1));
    CHECK(!markov_parent(MarkovTriple(1, 1, 1)).has_value());
    CHECK(markov_children(MarkovTriple(1, 2, 5)) ==
          std::vector<MarkovTriple>{MarkovTriple(1, 5, 13), MarkovTriple(2, 5, 29)});
}

TEST_CASE("markov tree enumeration") {
    auto t0 = enumerate_tree(0);
    CHECK(t0.size() == 1);
    CHECK(t0[0].triple == MarkovTriple(1, 1, 1));

    auto t2 = enumerate_tree(2);
    REQUIRE(t2.size() == 3);
    CHECK(t2[0].triple == MarkovTriple(1, 1, 1));
    CHECK(t2[1].triple == MarkovTriple(1, 1, 2));
    CHECK(t2[2].triple == MarkovTriple(1, 2, 5));
    CHECK(t2[2].parent == MarkovTriple(1, 1, 2));
    CHECK(t2[2].depth == 2);

    auto t4 = enumerate_tree(4);
    CHECK(t4.size() == 9);
    std::set<MarkovTriple> seen;
    for (const MarkovNode& n : t4) {
        CHECK(MarkovTriple::satisfies_equation(n.triple.a(), n.triple.b(), n.triple.c()));
        CHECK(seen.insert(n.triple).second);
    }
    for (const MarkovTriple& t :
         {MarkovTriple(1, 5, 13), MarkovTriple(2, 5, 29), MarkovTriple(1, 13, 34),
          MarkovTriple(5, 13, 194), MarkovTriple(2, 29, 169), MarkovTriple(5, 29, 433)})
        CHECK(seen.count(t) == 1);
}

TEST_CASE("clifford potentials") {
    CHECK(clifford_potential(2) ==
          make_poly(2, {{{1, 0}, "1"}, {{0, 1}, "1"}, {{-1, -1}, "1"}}));
    CHECK(clifford_potential(3) == make_poly(3, {{{1, 0, 0}, "1"},
                                                 {{0, 1, 0}, "1"},
                                                 {{0, 0, 1}, "1"},
                                                 {{-1, -1, -1}, "1"}}));
    for (int n = 2; n <= 4; ++n) CHECK(is_fano(newton(clifford_potential(n))).fano);
}

TEST_CASE("vianna triangles") {
    CHECK(vianna_triangle(MarkovTriple(1, 1, 1)) ==
          make_polytope(2, {{1, 0}, {0, 1}, {-1, -1}}));

    LatticePolytope t112 = vianna_triangle(MarkovTriple(1, 1, 2));
    CHECK(are_equivalent(t112, make_polytope(2, {{0, 1}, {-1, -2}, {1, -2}})));

    Pipeline pipe;
    for (const MarkovNode& node : enumerate_tree(3)) {
        const NodeArtifacts& art = pipe.lifted(node.triple, 2);
        CHECK(affine_edge_lengths(art.polytope) == node.triple.sorted_entries());
        CHECK(art.potential.has_value());  // the algebraic track survives the walk
        CHECK(newton(*art.potential) == art.polytope);
    }
}

TEST_CASE("lifted tori") {
    // (1,1,2): the displayed general-n potential, compared up to equivalence
    for (int n = 3; n <= 4; ++n) {
        auto [pot, poly] = lifted_vianna(MarkovTriple(1, 1, 2), n);
        REQUIRE(pot.has_value());
        CHECK(newton(*pot) == poly);
        CHECK(are_equivalent(poly, newton(w_t112(n))));
        // fingerprints are basis-independent
        if (n == 3) CHECK(fingerprint(poly) == fingerprint(newton(w_t112(3))));
    }
    // and the judicious-basis display at n = 3
    auto [pot3, poly3] = lifted_vianna(MarkovTriple(1, 1, 2), 3);
    CHECK(are_equivalent(poly3, newton(w_bar_112_n3())));

    auto [potc, polyc] = lifted_vianna(MarkovTriple(1, 1, 1), 3);
    CHECK(polyc == newton(clifford_potential(3)));
    CHECK(*potc == clifford_potential(3));

    // n = 2 returns the base data
    auto [pot2, poly2] = lifted_vianna(MarkovTriple(1, 1, 2), 2);
    CHECK(are_equivalent(poly2, newton(w_t112(2))));

    // structural validation of every lift within depth 2
    Pipeline pipe;
    for (const MarkovNode& node : enumerate_tree(2)) {
        const NodeArtifacts& art = pipe.lifted(node.triple, 3);
        REQUIRE(art.width.has_value());
        WidthHeights wh = width_heights(art.polytope, *art.width);
        CHECK(wh.h_min == -1);
        CHECK(wh.h_max == 3);
        CHECK(slice(art.polytope, *art.width, wh.h_max).vertex_count() == 1);
        CHECK(art.polytope.vertex_count() == 4);
    }
}

TEST_CASE("exotic lifts") {
    Pipeline pipe;

    // (1,1,2), n = 3: equivalent to the displayed surgery result
    const NodeArtifacts& e112 = pipe.exotic(MarkovTriple(1, 1, 2), 3);
    REQUIRE(e112.potential.has_value());
    CHECK(are_equivalent(e112.polytope, newton(w_tilde_112_n3())));
    CHECK(fingerprint(e112.polytope) == fingerprint(newton(w_tilde_112_n3())));
    CHECK(affine_edge_lengths(e112.polytope) == std::vector<Int>{1, 1, 1, 3, 3, 6});

    // (1,1,1), n = 3: the higher-mutation surgery z -> z(1 + x_1 + x_2)
    const NodeArtifacts& e111 = pipe.exotic(MarkovTriple(1, 1, 1), 3);
    REQUIRE(e111.factor_potential.has_value());
    CHECK(are_equivalent(newton(*e111.factor_potential), newton(one_plus_sum(2))));
    CHECK(affine_edge_lengths(e111.polytope) == std::vector<Int>{1, 1, 1, 3, 3, 3});

    // augmentation cross-checks hold on the corpus
    for (const MarkovNode& node : enumerate_tree(2)) {
        const NodeArtifacts& art = pipe.exotic(node.triple, 3);
        CHECK(art.augmentation_checked);
        CHECK(art.base_monomial.has_value());
        CHECK(art.augmentation_index.has_value());
    }
}

TEST_CASE("family report") {
    FamilyReport rep = family_report(1, 3);
    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.complete);
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(rep.rows[i].ok);
        CHECK(rep.rows[i].distinct_from_all);
        CHECK(rep.equivalent[i][i]);  // reflexive
        for (std::size_t j = 0; j < rep.rows.size(); ++j) {
            CHECK(rep.equivalent[i][j] == rep.equivalent[j][i]);
            if (i != j) CHECK(!rep.equivalent[i][j]);
        }
    }

    FamilyReport rep0 = family_report(0, 3);
    REQUIRE(rep0.rows.size() == 2);
    CHECK(rep0.rows[0].fp->edge_lengths == std::vector<Int>{1, 1, 1, 1, 1, 1});
    CHECK(rep0.rows[1].fp->edge_lengths == std::vector<Int>{1, 1, 1, 3, 3, 3});
    CHECK(!rep0.equivalent[0][1]);
}
