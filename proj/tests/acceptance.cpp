// Acceptance suite: every criterion runs at its stated tolerance and prints
// one pass/fail line. All comparisons are exact unless a runtime bound is
// part of the criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <iostream>

#include "support.hpp"

using namespace mutkit;
using namespace testsup;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool ok = true;
    void expect(bool cond) {
        ok = ok && cond;
        CHECK(cond);
    }
    ~Criterion() {
        std::cout << "ACCEPTANCE " << id << " (" << title << "): " << (ok ? "PASS" : "FAIL")
                  << std::endl;
    }
};

double seconds_of(const std::chrono::steady_clock::time_point& a,
                  const std::chrono::steady_clock::time_point& b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

TEST_CASE("criterion 1: golden wall-crossing, bit-exact, < 0.1 s") {
    Criterion c{1, "golden wall-crossing"};
    LaurentPoly w = w_bar_112_n3();
    LaurentPoly lam = w_lambda_112_2d();
    auto t0 = std::chrono::steady_clock::now();
    auto [result, outcome] = bsp_transform(w, 2, lam);
    auto t1 = std::chrono::steady_clock::now();
    c.expect(result == w_tilde_112_n3());
    c.expect(outcome.consistency.has_value() && outcome.consistency->verified);
    double secs = seconds_of(t0, t1);
    c.expect(secs < 0.1);
    std::cout << "  wall-crossing runtime: " << secs << " s" << std::endl;
}

TEST_CASE("criterion 2: golden augmentation lifts") {
    Criterion c{2, "golden augmentation lifts"};
    // Clifford, n = 2 and 3: 1 + sum y_i with indices 3 and 4
    for (int n = 2; n <= 3; ++n) {
        LiftResult lift = augmentation_lift(clifford_potential(n), Exponent(n, -1));
        c.expect(lift.full_rank);
        c.expect(lift.index == n + 1);
        UnimodularMap fix = basis_correction(lift, clifford_paper_basis(n));
        c.expect(apply_unimodular(lift.lifted, fix) == one_plus_sum(n));
    }
    // (1,1,2) family, n = 2, 3, 4: y_2 + ... + y_n + (1 + y_1)^2
    for (int n = 2; n <= 4; ++n) {
        Exponent v(n, -1);
        v[1] = -2;
        LiftResult lift = augmentation_lift(w_t112(n), v);
        c.expect(lift.full_rank);
        UnimodularMap fix = basis_correction(lift, family112_paper_basis(n));
        c.expect(apply_unimodular(lift.lifted, fix) == lambda_112_family(n));
    }
}

TEST_CASE("criterion 3: Newton-mutation consistency on the corpus") {
    Criterion c{3, "Newton-mutation consistency"};
    // disk surgery
    {
        LaurentPoly f = make_poly(2, {{{1, 1}, "1"}, {{0, -1}, "1"}, {{1, -1}, "1"}});
        LaurentPoly g = make_poly(1, {{{0}, "1"}, {{1}, "1"}});
        auto [res, outcome] = bsp_transform(f, 1, g);
        c.expect(newton(res).vertices() == outcome.polytope.vertices());
    }
    // higher mutation, n = 3 and 4
    for (int n = 3; n <= 4; ++n) {
        auto [res, outcome] = bsp_transform(clifford_axis_form(n), n - 1, one_plus_sum(n - 1));
        c.expect(newton(res).vertices() == outcome.polytope.vertices());
    }
    // exotic (1,1,2)
    {
        auto [res, outcome] = bsp_transform(w_bar_112_n3(), 2, w_lambda_112_2d());
        c.expect(newton(res).vertices() == outcome.polytope.vertices());
    }
}

TEST_CASE("criterion 4: polytope structure of the (1,1,2) pair") {
    Criterion c{4, "polytope structure"};
    LatticePolytope lifted = newton(w_bar_112_n3());
    WidthVector w(iv({0, 0, 1}));
    WidthHeights wh = width_heights(lifted, w);
    c.expect(wh.h_min == -1);
    c.expect(wh.h_max == 3);
    c.expect(wh.width == 4);
    c.expect(slice(lifted, w, wh.h_max).vertex_count() == 1);

    LatticePolytope exotic = newton(w_tilde_112_n3());
    IntVec apex = iv({0, 0, -1});
    std::vector<IntVec> facet_pts;
    for (const IntVec& v : exotic.vertices())
        if (!(v == apex)) {
            c.expect(vec_gcd(vec_sub(v, apex)) == 1);  // apex edges {1,1,1}
            facet_pts.push_back(v);
        }
    std::vector<Int> facet_lengths;
    for (std::size_t i = 0; i < facet_pts.size(); ++i)
        for (std::size_t j = i + 1; j < facet_pts.size(); ++j)
            facet_lengths.push_back(vec_gcd(vec_sub(facet_pts[i], facet_pts[j])));
    std::sort(facet_lengths.begin(), facet_lengths.end());
    c.expect(facet_lengths == std::vector<Int>{3, 3, 6});  // {na, nb, nc}, n = 3

    LatticePolytope facet = LatticePolytope::from_points(3, facet_pts);
    LatticePolytope facet_reduced = induced_coordinates(facet).first;
    LatticePolytope factor = make_polytope(2, {{0, 1}, {0, 0}, {2, 0}});
    c.expect(are_equivalent(facet_reduced, dilate(factor, 3)));
}

TEST_CASE("criterion 5: distinctness report at depth 2, n = 3, < 60 s") {
    Criterion c{5, "distinctness report"};
    auto t0 = std::chrono::steady_clock::now();
    FamilyReport rep = family_report(2, 3);
    auto t1 = std::chrono::steady_clock::now();
    c.expect(rep.complete);
    c.expect(rep.rows.size() == 6);
    int pairs = 0, distinct = 0, fp_decided = 0;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        c.expect(rep.rows[i].ok);
        for (std::size_t j = i + 1; j < rep.rows.size(); ++j) {
            ++pairs;
            if (!rep.equivalent[i][j]) ++distinct;
            if (!(*rep.rows[i].fp == *rep.rows[j].fp)) ++fp_decided;
        }
    }
    c.expect(pairs == 15);
    c.expect(distinct == 15);
    c.expect(fp_decided == 15);  // fingerprints alone decide every pair
    double secs = seconds_of(t0, t1);
    c.expect(secs < 60.0);
    std::cout << "  report runtime: " << secs << " s" << std::endl;
}

TEST_CASE("criterion 6: figure reproduction") {
    Criterion c{6, "figure reproduction"};
    RenderConfig cfg;
    cfg.projection = named_projection("yz");
    for (const LaurentPoly& pot : {w_bar_112_n3(), w_tilde_112_n3()}) {
        LatticePolytope p = newton(pot);
        std::string svg = render_svg(p, pot, cfg);
        std::set<IntVec> verts(p.vertices().begin(), p.vertices().end());
        std::set<IntVec> supp;
        for (const auto& [e, coeff] : pot.terms()) supp.insert(e);
        c.expect(svg_markers(svg, "vertex") == verts);
        c.expect(svg_markers(svg, "support") == supp);
        c.expect(render_svg(p, pot, cfg) == svg);  // byte-stable
    }
}

TEST_CASE("criterion 7: property suites, >= 200 cases each") {
    Criterion c{7, "property suites"};
    struct Named {
        const char* name;
        SuiteResult res;
    };
    std::vector<Named> suites{
        {"laurent ring axioms", suite_ring_axioms(1001, 200)},
        {"exact-division round-trip", suite_division_roundtrip(1002, 200)},
        {"newton equivariance", suite_newton_equivariance(1003, 200)},
        {"hull idempotence", suite_hull_idempotence(1004, 200)},
        {"containment vs brute force", suite_containment_bruteforce(1005, 200)},
        {"mutation round-trip with -w", suite_mutation_roundtrip(1006, 200)},
        {"witness independence", suite_witness_independence(1007, 200)},
        {"serializer round-trips", suite_serialization_roundtrip(1008, 200)},
    };
    for (const Named& s : suites) {
        c.expect(s.res.cases >= 200);
        c.expect(s.res.failures == 0);
        std::cout << "  " << s.name << ": " << s.res.cases << " cases, " << s.res.failures
                  << " failures" << std::endl;
    }
}

TEST_CASE("criterion 8: pipeline reproduces the Markov triangles") {
    Criterion c{8, "pipeline triangles"};
    Pipeline pipe;
    for (const MarkovNode& node : enumerate_tree(3)) {
        const NodeArtifacts& art = pipe.lifted(node.triple, 2);
        c.expect(affine_edge_lengths(art.polytope) == node.triple.sorted_entries());
    }
}
