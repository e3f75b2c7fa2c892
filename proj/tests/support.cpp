#include "support.hpp"

#include <algorithm>

namespace testsup {

IntVec iv(const std::vector<long>& v) {
    IntVec out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

RatVec rv(const std::vector<long>& v) {
    RatVec out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

LaurentPoly make_poly(int rank,
                      const std::vector<std::pair<std::vector<long>, std::string>>& terms) {
    LaurentPoly f(rank);
    for (const auto& [e, c] : terms) f.add_term(iv(e), parse_rational(c));
    return f;
}

LatticePolytope make_polytope(int rank, const std::vector<std::vector<long>>& pts) {
    std::vector<IntVec> points;
    for (const auto& p : pts) points.push_back(iv(p));
    return LatticePolytope::from_points(rank, points);
}

LaurentPoly w_bar_112_n3() {
    return make_poly(3, {{{0, 1, -1}, "1"},
                         {{0, 0, -1}, "1"},
                         {{1, 0, -1}, "2"},
                         {{2, 0, -1}, "1"},
                         {{-1, -2, 3}, "1"}});
}

LaurentPoly w_lambda_112_2d() {
    return make_poly(2, {{{0, 1}, "1"}, {{0, 0}, "1"}, {{1, 0}, "2"}, {{2, 0}, "1"}});
}

LaurentPoly w_tilde_112_n3() {
    LaurentPoly cube = pow(w_lambda_112_2d(), 3);
    LaurentPoly out(3);
    out.add_term(iv({0, 0, -1}), 1);
    for (const auto& [e, c] : cube.terms())
        out.add_term(iv({e[0].get_si() - 1, e[1].get_si() - 2, 3}), c);
    return out;
}

LaurentPoly w_t112(int n) {
    LaurentPoly f(n);
    for (int i = 1; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = 1;
        f.add_term(e, 1);
    }
    Exponent base(n, -1);
    base[1] = -2;
    for (int k = 0; k <= 2; ++k) {
        Exponent e = base;
        e[0] += k;
        f.add_term(e, k == 1 ? 2 : 1);
    }
    return f;
}

LaurentPoly lambda_112_family(int n) {
    LaurentPoly f(n);
    for (int i = 1; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = 1;
        f.add_term(e, 1);
    }
    for (int k = 0; k <= 2; ++k) {
        Exponent e(n, 0);
        e[0] = k;
        f.add_term(e, k == 1 ? 2 : 1);
    }
    return f;
}

LaurentPoly one_plus_sum(int n) {
    LaurentPoly f = LaurentPoly::constant(n, 1);
    for (int i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = 1;
        f.add_term(e, 1);
    }
    return f;
}

LaurentPoly clifford_axis_form(int n) {
    LaurentPoly f(n);
    Exponent z(n, 0);
    z[n - 1] = -1;
    f.add_term(z, 1);
    for (int i = 0; i + 1 < n; ++i) {
        Exponent e(n, 0);
        e[i] = 1;
        e[n - 1] = -1;
        f.add_term(e, 1);
    }
    Exponent top(n, -1);
    top[n - 1] = n;
    f.add_term(top, 1);
    return f;
}

IntMat clifford_paper_basis(int n) {
    IntMat rows;
    for (int k = 0; k < n; ++k) {
        IntVec r(n, 1);
        r[k] = 2;
        rows.push_back(r);
    }
    return rows;
}

IntMat family112_paper_basis(int n) {
    IntMat rows;
    IntVec first(n, 0);
    first[0] = 1;
    rows.push_back(first);
    IntVec shift(n, 1);
    shift[1] = 2;
    for (int k = 1; k < n; ++k) {
        IntVec r = shift;
        r[k] += 1;
        rows.push_back(r);
    }
    return rows;
}

UnimodularMap basis_correction(const LiftResult& lift, const IntMat& paper_basis) {
    // paper = C * ours; lifted exponents transform by C^{-T}
    auto binv = inverse_rational(lift.basis);
    if (!binv) throw Error(errc::invalid_argument, "degenerate basis");
    RatMat c(paper_basis.size(), RatVec(paper_basis.size(), 0));
    for (std::size_t i = 0; i < paper_basis.size(); ++i)
        for (std::size_t j = 0; j < paper_basis.size(); ++j) {
            Rat acc = 0;
            for (std::size_t k = 0; k < paper_basis[0].size(); ++k)
                acc += Rat(paper_basis[i][k]) * (*binv)[k][j];
            c[i][j] = acc;
        }
    if (!is_integral(c)) throw Error(errc::invalid_argument, "bases span different lattices");
    auto cinv = inverse_unimodular(to_integral(c));
    if (!cinv) throw Error(errc::invalid_argument, "basis change is not unimodular");
    return UnimodularMap(mat_transpose(*cinv));
}

long rand_long(Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng);
}

LaurentPoly random_poly(Rng& rng, int rank, int max_terms, long exp_bound, long coeff_bound) {
    int terms = static_cast<int>(rand_long(rng, 1, max_terms));
    LaurentPoly f(rank);
    for (int t = 0; t < terms; ++t) {
        Exponent e(rank);
        for (int i = 0; i < rank; ++i) e[i] = rand_long(rng, -exp_bound, exp_bound);
        long c = rand_long(rng, -coeff_bound, coeff_bound);
        if (c == 0) c = 1;
        f.add_term(e, Rat(c));
    }
    return f;
}

UnimodularMap random_unimodular(Rng& rng, int n, int ops) {
    IntMat m = identity_matrix(n);
    for (int t = 0; t < ops; ++t) {
        int kind = static_cast<int>(rand_long(rng, 0, 2));
        int i = static_cast<int>(rand_long(rng, 0, n - 1));
        int j = static_cast<int>(rand_long(rng, 0, n - 1));
        if (kind == 0 && i != j) {
            long k = rand_long(rng, -2, 2);
            for (int c = 0; c < n; ++c) m[i][c] += k * m[j][c];
        } else if (kind == 1 && i != j) {
            std::swap(m[i], m[j]);
        } else {
            for (int c = 0; c < n; ++c) m[i][c] = -m[i][c];
        }
    }
    return UnimodularMap(m);
}

std::vector<IntVec> random_points(Rng& rng, int rank, int count, long bound) {
    std::vector<IntVec> out;
    for (int t = 0; t < count; ++t) {
        IntVec p(rank);
        for (int i = 0; i < rank; ++i) p[i] = rand_long(rng, -bound, bound);
        out.push_back(p);
    }
    return out;
}

bool oracle_contains(const RatVec& p, const std::vector<RatVec>& points) {
    const int d = static_cast<int>(p.size());
    const int m = static_cast<int>(points.size());
    // every point of conv(points) lies in a simplex spanned by <= d+1 of them
    for (int size = 1; size <= std::min(m, d + 1); ++size) {
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        while (true) {
            RatMat a(d + 1, RatVec(size));
            RatVec b(d + 1);
            for (int r = 0; r < d; ++r) {
                for (int k = 0; k < size; ++k) a[r][k] = points[comb[k]][r];
                b[r] = p[r];
            }
            for (int k = 0; k < size; ++k) a[d][k] = 1;
            b[d] = 1;
            if (auto sol = solve_any(a, b)) {
                bool ok = true;
                for (const Rat& l : *sol) ok = ok && l >= 0;
                if (ok) {
                    // verify (solve_any picks one solution of a possibly
                    // underdetermined system)
                    RatVec rec(d, 0);
                    Rat tot = 0;
                    for (int k = 0; k < size; ++k) {
                        tot += (*sol)[k];
                        for (int r = 0; r < d; ++r) rec[r] += (*sol)[k] * points[comb[k]][r];
                    }
                    if (tot == 1 && rec == p) return true;
                }
            }
            int i = size - 1;
            while (i >= 0 && comb[i] == m - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return false;
}

std::optional<LaurentPoly> oracle_divide(const LaurentPoly& f, const LaurentPoly& g) {
    const int n = f.rank();
    // candidate quotient support: the componentwise exponent box
    IntVec lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        bool first = true;
        Int fmin, fmax, gmin, gmax;
        for (const auto& [e, c] : f.terms()) {
            if (first || e[i] < fmin) fmin = e[i];
            if (first || e[i] > fmax) fmax = e[i];
            first = false;
        }
        first = true;
        for (const auto& [e, c] : g.terms()) {
            if (first || e[i] < gmin) gmin = e[i];
            if (first || e[i] > gmax) gmax = e[i];
            first = false;
        }
        lo[i] = fmin - gmin;
        hi[i] = fmax - gmax;
        if (lo[i] > hi[i]) return std::nullopt;
    }
    std::vector<Exponent> box;
    Exponent cur = lo;
    while (true) {
        box.push_back(cur);
        int i = n - 1;
        while (i >= 0) {
            cur[i] += 1;
            if (cur[i] <= hi[i]) break;
            cur[i] = lo[i];
            --i;
        }
        if (i < 0) break;
    }
    // unknowns: one coefficient per box point; equations over all products
    std::map<Exponent, int> eq_index;
    for (const Exponent& s : box)
        for (const auto& [eg, cg] : g.terms()) {
            Exponent e = vec_add(s, eg);
            eq_index.emplace(e, static_cast<int>(eq_index.size()));
        }
    for (const auto& [e, c] : f.terms()) eq_index.emplace(e, static_cast<int>(eq_index.size()));
    RatMat a(eq_index.size(), RatVec(box.size(), 0));
    RatVec b(eq_index.size(), 0);
    for (std::size_t k = 0; k < box.size(); ++k)
        for (const auto& [eg, cg] : g.terms()) a[eq_index[vec_add(box[k], eg)]][k] += cg;
    for (const auto& [e, c] : f.terms()) b[eq_index[e]] = c;
    auto sol = solve_any(a, b);
    if (!sol) return std::nullopt;
    LaurentPoly q(n);
    for (std::size_t k = 0; k < box.size(); ++k) q.add_term(box[k], (*sol)[k]);
    if (!(mul(q, g) == f)) return std::nullopt;
    return q;
}

std::vector<IntVec> oracle_hull_vertices(const std::vector<IntVec>& points) {
    std::vector<RatVec> rp;
    for (const IntVec& p : points) rp.push_back(to_rational(p));
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<RatVec> others;
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i && !(rp[j] == rp[i])) others.push_back(rp[j]);
        if (!oracle_contains(rp[i], others)) out.push_back(points[i]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------

SuiteResult suite_ring_axioms(unsigned seed, int cases) {
    Rng rng(seed);
    SuiteResult res;
    for (int t = 0; t < cases; ++t) {
        int rank = static_cast<int>(rand_long(rng, 1, 4));
        LaurentPoly f = random_poly(rng, rank), g = random_poly(rng, rank),
                    h = random_poly(rng, rank);
        ++res.cases;
        bool ok = add(add(f, g), h) == add(f, add(g, h));
        ok = ok && add(f, g) == add(g, f);
        ok = ok && mul(f, g) == mul(g, f);
        ok = ok && mul(mul(f, g), h) == mul(f, mul(g, h));
        ok = ok && mul(f, add(g, h)) == add(mul(f, g), mul(f, h));
        if (!ok) ++res.failures;
    }
    return res;
}

SuiteResult suite_division_roundtrip(unsigned seed, int cases) {
    Rng rng(seed);
    SuiteResult res;
    for (int t = 0; t < cases; ++t) {
        int rank = static_cast<int>(rand_long(rng, 1, 3));
        LaurentPoly q = random_poly(rng, rank, 4, 4), g = random_poly(rng, rank, 4, 4);
        ++res.cases;
        if (!(divide_exact(mul(q, g), g) == q)) ++res.failures;
    }
    return res;
}

SuiteResult suite_newton_equivariance(unsigned seed, int cases) {
    Rng rng(seed);
    SuiteResult res;
    for (int t = 0; t < cases; ++t) {
        int rank = static_cast<int>(rand_long(rng, 1, 4));
        LaurentPoly f = random_poly(rng, rank);
        UnimodularMap m = random_unimodular(rng, rank);
        ++res.cases;
        bool ok = apply_unimodular(apply_unimodular(f, m), m.inverse()) == f;
        ok = ok && newton(apply_unimodular(f, m)) == apply_unimodular(newton(f), m);
        if (!ok) ++res.failures;
    }
    return res;
}

SuiteResult suite_hull_idempotence(unsigned seed, int cases) {
    Rng rng(seed);
    SuiteResult res;
    for (int t = 0; t < cases; ++t) {
        int rank = static_cast<int>(rand_long(rng, 1, 3));
        auto pts = random_points(rng, rank, static_cast<int>(rand_long(rng, 1, 10)));
        LatticePolytope p = LatticePolytope::from_points(rank, pts);
        ++res.cases;
        bool ok = LatticePolytope::from_points(rank, p.vertices()) == p;
        PreparedHull ph(p);
        for (const IntVec& q : pts) ok = ok && ph.contains(to_rational(q));
        if (!ok) ++res.failures;
    }
    return res;
}

SuiteResult suite_containment_bruteforce(unsigned seed, int cases) {
    Rng rng(seed);
    SuiteResult res;
    while (res.cases < cases) {
        int rank = static_cast<int>(rand_long(rng, 2, 3));
        auto pts = random_points(rng, rank, static_cast<int>(rand_long(rng, 1, 8)));
        LatticePolytope p = LatticePolytope::from_points(rank, pts);
        PreparedHull ph(p);
        std::vector<RatVec> rp;
        for (const IntVec& q : pts) rp.push_back(to_rational(q));
        for (int q = 0; q < 4 && res.cases < cases; ++q) {
            RatVec probe(rank);
            for (int i = 0; i < rank; ++i)
                {
                    Rat pr{rand_long(rng, -12, 12), rand_long(rng, 1, 2)};
                    pr.canonicalize();
                    probe[i] = pr;
                }
            ++res.cases;
            if (ph.contains(probe) != oracle_contains(probe, rp)) ++res.failures;
        }
    }
    return res;
}

namespace {

// valid specs harvested from small random polygons, for the round-trip and
// witness-independence suites
std::vector<std::pair<LatticePolytope, MutationSpec>> harvest_specs(unsigned seed,
                                                                    int min_specs) {
    Rng rng(seed);
    std::vector<std::pair<LatticePolytope, MutationSpec>> out;
    SearchOptions opts;
    opts.w_bound = 3;
    opts.factor_vertex_bound = 3;
    while (static_cast<int>(out.size()) < min_specs) {
        auto pts = random_points(rng, 2, static_cast<int>(rand_long(rng, 3, 5)), 4);
        LatticePolytope p = LatticePolytope::from_points(2, pts);
        if (p.affine_dim() < 2) continue;
        std::vector<MutationSpec> specs = search_mutations(p, opts);
        int keep = 0;
        for (MutationSpec& s : specs) {
            out.emplace_back(p, std::move(s));
            if (++keep == 6) break;  // spread across many polygons
        }
    }
    return out;
}

}  // namespace

SuiteResult suite_mutation_roundtrip(unsigned seed, int min_cases) {
    SuiteResult res;
    for (const auto& [p, spec] : harvest_specs(seed, min_cases)) {
        ++res.cases;
        try {
            MutationOutcome mo = mutate_polytope(p, spec.w, spec.factor);
            MutationOutcome back = mutate_polytope(mo.polytope, spec.w.negated(), spec.factor);
            if (!(back.polytope == p)) ++res.failures;
        } catch (const Error&) {
            ++res.failures;
        }
    }
    return res;
}

SuiteResult suite_witness_independence(unsigned seed, int min_cases) {
    SuiteResult res;
    auto specs = harvest_specs(seed, min_cases);
    // corpus examples first
    specs.emplace_back(
        make_polytope(2, {{1, 1}, {0, -1}, {1, -1}}),
        MutationSpec{WidthVector(iv({0, 1})), make_polytope(2, {{0, 0}, {1, 0}}), {}});
    specs.emplace_back(make_polytope(3, {{0, 1, -1}, {0, 0, -1}, {2, 0, -1}, {-1, -2, 3}}),
                       MutationSpec{WidthVector(iv({0, 0, 1})),
                                    make_polytope(3, {{0, 0, 0}, {0, 1, 0}, {2, 0, 0}}),
                                    {}});
    for (const auto& [p, spec] : specs) {
        std::optional<MutationOutcome> mo_opt;
        try {
            mo_opt = mutate_polytope(p, spec.w, spec.factor);
        } catch (const Error&) {
            ++res.cases;
            ++res.failures;
            continue;
        }
        const MutationOutcome& mo = *mo_opt;
        WidthHeights wh = width_heights(p, spec.w);
        // replace each maximal witness by every valid sub-witness and
        // reassemble the mutation hull independently of mutate_polytope
        std::vector<std::pair<Int, std::vector<IntVec>>> choices;
        bool usable = true;
        for (const auto& [h, g] : mo.spec.witnesses) {
            if (g.is_empty()) continue;
            std::vector<IntVec> gpts = lattice_points(g);
            if (gpts.size() > 5) usable = false;  // keep the subset scan small
            choices.emplace_back(h, gpts);
        }
        if (!usable || choices.empty()) continue;
        LatticePolytope kf_base = mo.spec.factor;

        // iterate subsets of the first witness's points, keep others maximal
        const auto& [h0, pts0] = choices.front();
        const std::size_t m = pts0.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
            if (res.cases >= min_cases * 2) break;
            std::vector<IntVec> sub;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (std::size_t(1) << i)) sub.push_back(pts0[i]);
            LatticePolytope g_sub = LatticePolytope::from_points(p.rank(), sub);
            // the sub-witness must still satisfy the vertex condition
            Int k = -h0;
            LatticePolytope kf = dilate(kf_base, k);
            PreparedHull sum_hull(minkowski_sum(g_sub, kf));
            PreparedHull slice_hull(slice(p, spec.w, h0));
            bool valid = true;
            for (const IntVec& v : p.vertices())
                if (spec.w(v) == h0 && !sum_hull.contains(to_rational(v))) valid = false;
            for (const IntVec& gp : g_sub.vertices())
                for (const IntVec& fv : kf.vertices())
                    if (!slice_hull.contains(to_rational(vec_add(gp, fv)))) valid = false;
            if (!valid) continue;
            ++res.cases;
            // independent reassembly of the mutation hull
            std::vector<RatVec> points;
            for (const IntVec& v : g_sub.vertices()) points.push_back(to_rational(v));
            for (const auto& [h, g] : mo.spec.witnesses) {
                if (h == h0 || g.is_empty()) continue;
                for (const IntVec& v : g.vertices()) points.push_back(to_rational(v));
            }
            for (Int h = 0; h <= wh.h_max; h += 1) {
                RationalPolytope ph = slice(p, spec.w, h);
                for (const RatVec& sv : ph.vertices())
                    for (const IntVec& fv : kf_base.vertices()) {
                        RatVec x(sv.size());
                        for (std::size_t i = 0; i < sv.size(); ++i)
                            x[i] = sv[i] + Rat(h * fv[i]);
                        points.push_back(std::move(x));
                    }
            }
            RationalPolytope assembled = RationalPolytope::from_points(p.rank(), points);
            if (!(assembled == RationalPolytope::from_lattice(mo.polytope))) ++res.failures;
        }
    }
    return res;
}

SuiteResult suite_serialization_roundtrip(unsigned seed, int cases) {
    Rng rng(seed);
    SuiteResult res;
    for (int t = 0; t < cases; ++t) {
        int rank = static_cast<int>(rand_long(rng, 1, 4));
        ++res.cases;
        bool ok = true;
        LaurentPoly f = random_poly(rng, rank);
        json jf = poly_to_json(f);
        ok = ok && poly_from_json(json::parse(dump_canonical(jf))) == f;
        LatticePolytope p =
            LatticePolytope::from_points(rank, random_points(rng, rank, 5, 5));
        json jp = polytope_to_json(p);
        ok = ok && lattice_polytope_from_json(json::parse(dump_canonical(jp))) == p;
        std::vector<RatVec> qpts;
        for (const IntVec& v : p.vertices()) {
            RatVec r;
            for (const Int& x : v) r.push_back(Rat(x) / Rat(rand_long(rng, 1, 3)));
            qpts.push_back(std::move(r));
        }
        RationalPolytope q = RationalPolytope::from_points(rank, qpts);
        json jq = polytope_to_json(q);
        ok = ok && rational_polytope_from_json(json::parse(dump_canonical(jq))) == q;
        // byte idempotence
        ok = ok && dump_canonical(json::parse(dump_canonical(jf))) == dump_canonical(jf);
        if (!ok) ++res.failures;
    }
    return res;
}

std::set<IntVec> svg_markers(const std::string& svg, const std::string& cls) {
    std::set<IntVec> out;
    const std::string key = "class=\"" + cls + "\" data-lattice=\"";
    std::size_t pos = 0;
    while ((pos = svg.find(key, pos)) != std::string::npos) {
        pos += key.size();
        std::size_t end = svg.find('"', pos);
        std::string coords = svg.substr(pos, end - pos);
        IntVec v;
        std::size_t start = 0;
        while (start <= coords.size()) {
            std::size_t comma = coords.find(',', start);
            std::string item = coords.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            v.emplace_back(item);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        out.insert(v);
        pos = end;
    }
    return out;
}

}  // namespace testsup
