#include "mutkit/markov.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mutkit {

namespace {

std::vector<Int> sorted3(Int a, Int b, Int c) {
    std::vector<Int> v{std::move(a), std::move(b), std::move(c)};
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

bool MarkovTriple::satisfies_equation(const Int& a, const Int& b, const Int& c) {
    return a > 0 && b > 0 && c > 0 && a * a + b * b + c * c == 3 * a * b * c;
}

MarkovTriple::MarkovTriple(Int a, Int b, Int c) {
    auto v = sorted3(std::move(a), std::move(b), std::move(c));
    if (!satisfies_equation(v[0], v[1], v[2]))
        throw Error(errc::invalid_argument,
                    "(" + v[0].get_str() + "," + v[1].get_str() + "," + v[2].get_str() +
                        ") does not solve the Markov equation");
    a_ = v[0];
    b_ = v[1];
    c_ = v[2];
}

std::string MarkovTriple::str() const {
    return "(" + a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + ")";
}

MarkovTriple vieta_step(const MarkovTriple& t, int index) {
    std::vector<Int> e = t.sorted_entries();
    if (index < 0 || index > 2) throw Error(errc::invalid_argument, "bad Vieta index");
    Int prod = 1;
    for (int i = 0; i < 3; ++i)
        if (i != index) prod *= e[i];
    e[index] = 3 * prod - e[index];
    return MarkovTriple(e[0], e[1], e[2]);
}

std::optional<MarkovTriple> markov_parent(const MarkovTriple& t) {
    MarkovTriple down = vieta_step(t, 2);
    if (down.c() < t.c()) return down;
    return std::nullopt;
}

std::vector<MarkovTriple> markov_children(const MarkovTriple& t) {
    std::set<MarkovTriple> res;
    for (int i = 0; i < 3; ++i) {
        MarkovTriple s = vieta_step(t, i);
        if (!(s == t)) res.insert(s);
    }
    if (auto p = markov_parent(t)) res.erase(*p);
    return {res.begin(), res.end()};
}

std::vector<MarkovNode> enumerate_tree(int depth) {
    if (depth < 0) throw Error(errc::invalid_argument, "depth must be >= 0");
    std::vector<MarkovNode> out;
    std::set<MarkovTriple> seen;
    std::vector<MarkovNode> level{{MarkovTriple(1, 1, 1), std::nullopt, 0}};
    for (int d = 0; d <= depth; ++d) {
        std::sort(level.begin(), level.end(),
                  [](const MarkovNode& x, const MarkovNode& y) { return x.triple < y.triple; });
        std::vector<MarkovNode> next;
        for (const MarkovNode& node : level) {
            if (!seen.insert(node.triple).second) continue;
            out.push_back(node);
            if (d == depth) continue;
            for (const MarkovTriple& child : markov_children(node.triple))
                next.push_back({child, node.triple, d + 1});
        }
        level = std::move(next);
    }
    return out;
}

LaurentPoly clifford_potential(int n) {
    if (n < 1) throw Error(errc::invalid_argument, "dimension must be >= 1");
    LaurentPoly w(n);
    for (int i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = 1;
        w.add_term(e, 1);
    }
    w.add_term(Exponent(n, -1), 1);
    return w;
}

// ---------------------------------------------------------------------------
// pipeline internals
// ---------------------------------------------------------------------------

namespace {

std::vector<Int> triple_lengths(const MarkovTriple& t) { return t.sorted_entries(); }

Exponent lexmin_support(const LaurentPoly& f) { return f.terms().begin()->first; }

std::vector<Int> edge_multiset(const std::vector<IntVec>& pts) {
    std::vector<Int> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            out.push_back(vec_gcd(vec_sub(pts[i], pts[j])));
    std::sort(out.begin(), out.end());
    return out;
}

// Validated width vector of a lifted node: the polytope must be an
// n-simplex with n vertices at height -1 and the apex at height n, and the
// bottom facet must contain a triangle face with the triple's edge lengths.
std::optional<WidthVector> validate_lift(const LatticePolytope& p, int n,
                                         const MarkovTriple& t) {
    if (static_cast<int>(p.vertex_count()) != n + 1 || p.affine_dim() != n)
        return std::nullopt;
    const auto& verts = p.vertices();
    std::vector<Int> target = triple_lengths(t);
    for (std::size_t apex = 0; apex < verts.size(); ++apex) {
        RatMat rows;
        RatVec rhs;
        std::vector<IntVec> others;
        for (std::size_t j = 0; j < verts.size(); ++j) {
            rows.push_back(to_rational(verts[j]));
            rhs.emplace_back(j == apex ? Int(n) : Int(-1));
            if (j != apex) others.push_back(verts[j]);
        }
        auto sol = solve_any(rows, rhs);
        if (!sol || !is_integral(*sol)) continue;
        IntVec w = to_integral(*sol);
        if (!is_primitive(w)) continue;
        // verify (solve_any only guarantees a solution of the system it saw)
        bool ok = true;
        for (std::size_t j = 0; j < verts.size() && ok; ++j)
            ok = dot(w, verts[j]) == (j == apex ? Int(n) : Int(-1));
        if (!ok) continue;
        // triangle face with lengths {a,b,c} inside the bottom facet; all
        // faces of a simplex are vertex subsets
        bool found = false;
        const std::size_t m = others.size();
        for (std::size_t i = 0; i < m && !found; ++i)
            for (std::size_t j = i + 1; j < m && !found; ++j)
                for (std::size_t k = j + 1; k < m && !found; ++k)
                    found = edge_multiset({others[i], others[j], others[k]}) == target;
        if (!found) continue;
        return WidthVector(w);
    }
    return std::nullopt;
}

// Algebraic Markov step: with U carrying the step width vector to the dual
// of the last axis, substitute z -> z * W_F. At bottom height -k the factor
// polynomial is the exact k-th root of the monomial-normalized bottom slice;
// its Newton polytope must be the image of the step factor. Returns nothing
// when no such W_F exists or the substitution fails to be Laurent.
std::optional<LaurentPoly> algebraic_step(const LaurentPoly& w, const IntMat& u,
                                          const LatticePolytope& factor_normalized,
                                          const LatticePolytope& expected) {
    const int n = w.rank();
    const int axis = n - 1;
    UnimodularMap umap(u);
    LaurentPoly w_u = apply_unimodular(w, umap);
    auto slices = split_by_axis(w_u, axis);
    const Int h_min = slices.begin()->first;
    const LaurentPoly& bottom = slices.begin()->second;
    if (h_min >= 0) return std::nullopt;
    unsigned long k = Int(-h_min).get_ui();

    std::vector<IntVec> target_pts;
    for (const IntVec& v : factor_normalized.vertices()) {
        IntVec img = mat_apply(u, v);
        img.pop_back();  // axis coordinate, zero on the normalized factor
        target_pts.push_back(std::move(img));
    }
    LatticePolytope target = LatticePolytope::from_points(n - 1, target_pts);
    LatticePolytope bottom_newt = newton(bottom);
    Exponent shift = vec_sub(bottom_newt.vertices().front(),
                             vec_scale(Int(static_cast<long>(k)), target.vertices().front()));
    LaurentPoly base = mul(bottom, LaurentPoly::monomial(vec_neg(shift), 1));
    auto root = try_kth_root(base, k);
    if (!root) return std::nullopt;
    LaurentPoly w_f = *root;
    if (!(newton(w_f) == target)) return std::nullopt;

    try {
        auto [res_u, outcome] = bsp_transform(w_u, axis, w_f);
        LaurentPoly res = apply_unimodular(res_u, umap.inverse());
        if (!(newton(res) == expected))
            throw Error(errc::consistency_violation,
                        "algebraic step disagrees with the polytope mutation");
        return res;
    } catch (const NotLaurentError&) {
        return std::nullopt;
    }
}

// Primitive width-vector candidates in the box, small first.
std::vector<IntVec> width_candidates(int n, const Int& bound) {
    std::vector<IntVec> out;
    IntVec v(n, -bound);
    while (true) {
        if (is_primitive(v)) out.push_back(v);
        int i = n - 1;
        while (i >= 0) {
            ++v[i];
            if (v[i] <= bound) break;
            v[i] = -bound;
            --i;
        }
        if (i < 0) break;
    }
    std::stable_sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) {
        Int la = 0, lb = 0;
        for (const Int& x : a) la += abs(x);
        for (const Int& x : b) lb += abs(x);
        if (la != lb) return la < lb;
        return a < b;
    });
    return out;
}

}  // namespace

Pipeline::Pipeline(SearchOptions opts) : opts_(std::move(opts)) {}

NodeArtifacts Pipeline::step_node(const NodeArtifacts& parent, const MarkovTriple& child) {
    const int n = parent.n;
    const LatticePolytope& p = parent.polytope;

    if (n == 2) {
        std::vector<Int> target = triple_lengths(child);
        // prefer a spec whose algebraic step works so the potential track
        // survives the walk; fall back to a polytope-only edge
        std::optional<NodeArtifacts> fallback;
        for (const MutationSpec& spec : search_mutations(p, opts_)) {
            MutationOutcome mo = mutate_polytope(p, spec.w, spec.factor);
            if (affine_edge_lengths(mo.polytope) != target) continue;
            NodeArtifacts node;
            node.triple = child;
            node.n = 2;
            node.polytope = mo.polytope;
            node.steps = parent.steps;
            PipelineStep step{parent.triple, child, spec.w, spec.factor, std::nullopt, false};
            if (parent.potential) {
                IntMat u = unimodular_completion(spec.w.vec());
                if (auto pot = algebraic_step(*parent.potential, u, spec.factor, mo.polytope)) {
                    node.potential = *pot;
                    step.basis_change = u;
                    step.algebraic = true;
                }
            }
            bool algebraic = step.algebraic;
            node.steps.push_back(std::move(step));
            if (algebraic || !parent.potential) return node;
            if (!fallback) fallback = std::move(node);
        }
        if (fallback) return *fallback;
        throw Error(errc::pipeline_search_failed,
                    "no mutation found for the edge " + parent.triple.str() + " -> " +
                        child.str());
    }

    // rank >= 3: factors are faces of the current h = -1 facet; for each one
    // try small width vectors whose bottom slice is exactly that face
    if (!parent.width)
        throw Error(errc::pipeline_search_failed, "parent node lacks a validated width vector");
    LatticePolytope bottom = slice(p, *parent.width, Int(-1)).to_lattice();
    const auto& bverts = bottom.vertices();
    const std::size_t m = bverts.size();

    std::vector<std::vector<int>> faces;
    for (std::size_t size = 2; size <= m; ++size) {
        std::vector<int> comb;
        std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t start,
                                                                std::size_t k) {
            if (k == 0) {
                faces.push_back(comb);
                return;
            }
            for (std::size_t i = start; i + k <= m; ++i) {
                comb.push_back(static_cast<int>(i));
                gen(i + 1, k - 1);
                comb.pop_back();
            }
        };
        gen(0, size);
    }

    std::vector<IntVec> wcands = width_candidates(n, opts_.w_bound);
    long budget = opts_.node_budget;
    std::optional<NodeArtifacts> fallback3;
    for (const std::vector<int>& face : faces) {
        std::vector<IntVec> fpts;
        for (int idx : face) fpts.push_back(bverts[idx]);
        std::set<IntVec> fset(fpts.begin(), fpts.end());
        for (const IntVec& wv : wcands) {
            // the w-minimal face of the simplex must be exactly this face
            Int hface = dot(wv, fpts[0]);
            bool flat = true;
            for (const IntVec& q : fpts) flat = flat && dot(wv, q) == hface;
            if (!flat) continue;
            bool is_min_face = true;
            for (const IntVec& v : p.vertices()) {
                Int h = dot(wv, v);
                bool in_face = fset.count(v) > 0;
                if (in_face ? (h != hface) : (h <= hface)) {
                    is_min_face = false;
                    break;
                }
            }
            if (!is_min_face) continue;
            if (--budget < 0)
                throw Error(errc::search_budget_exceeded,
                            "lift pipeline exceeded its search budget on " +
                                parent.triple.str() + " -> " + child.str());
            WidthVector w(wv);
            LatticePolytope factor = LatticePolytope::from_points(n, fpts);
            std::optional<MutationOutcome> mo;
            try {
                mo = mutate_polytope(p, w, factor);
            } catch (const Error&) {
                continue;
            }
            auto width = validate_lift(mo->polytope, n, child);
            if (!width) continue;

            NodeArtifacts node;
            node.triple = child;
            node.n = n;
            node.polytope = mo->polytope;
            node.width = width;
            node.steps = parent.steps;
            PipelineStep step{parent.triple, child, w, mo->spec.factor, std::nullopt, false};
            if (parent.potential) {
                IntMat u = unimodular_completion(wv);
                if (auto pot = algebraic_step(*parent.potential, u, mo->spec.factor,
                                              mo->polytope)) {
                    node.potential = *pot;
                    step.basis_change = u;
                    step.algebraic = true;
                }
            }
            bool algebraic = step.algebraic;
            node.steps.push_back(std::move(step));
            if (algebraic || !parent.potential) return node;
            if (!fallback3) fallback3 = std::move(node);
        }
    }
    if (fallback3) return *fallback3;
    throw Error(errc::pipeline_search_failed,
                "no lift mutation found for the edge " + parent.triple.str() + " -> " +
                    child.str());
}

NodeArtifacts Pipeline::build_lifted(const MarkovTriple& t, int n) {
    if (n < 2) throw Error(errc::invalid_argument, "lift dimension must be >= 2");
    std::vector<MarkovTriple> path{t};
    while (auto p = markov_parent(path.back())) path.push_back(*p);
    std::reverse(path.begin(), path.end());

    NodeArtifacts node;
    node.triple = path.front();
    node.n = n;
    node.potential = clifford_potential(n);
    node.polytope = newton(*node.potential);
    if (n >= 3) {
        node.width = validate_lift(node.polytope, n, MarkovTriple(1, 1, 1));
        if (!node.width)
            throw Error(errc::consistency_violation, "Clifford lift failed validation");
    }
    for (std::size_t i = 1; i < path.size(); ++i) {
        auto key = std::make_tuple(path[i].a(), path[i].b(), path[i].c(), n, false);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            node = it->second;
            continue;
        }
        node = step_node(node, path[i]);
        cache_.emplace(key, node);
    }
    return node;
}

const NodeArtifacts& Pipeline::lifted(const MarkovTriple& t, int n) {
    auto key = std::make_tuple(t.a(), t.b(), t.c(), n, false);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, build_lifted(t, n)).first;
    return it->second;
}

NodeArtifacts Pipeline::build_exotic(const MarkovTriple& t, int n) {
    if (n < 3) throw Error(errc::invalid_argument, "exotic lifts start at dimension 3");
    const NodeArtifacts& lift = lifted(t, n);
    if (!lift.width)
        throw Error(errc::pipeline_search_failed, "lift node lacks a validated width vector");

    NodeArtifacts node;
    node.triple = t;
    node.n = n;
    node.exotic = true;
    node.steps = lift.steps;

    IntMat u = unimodular_completion(lift.width->vec());
    UnimodularMap umap(u);
    std::optional<LaurentPoly> w_lambda;

    if (lift.potential) {
        LaurentPoly w_u = apply_unimodular(*lift.potential, umap);
        auto slices = split_by_axis(w_u, n - 1);
        auto it = slices.find(Int(-1));
        if (it == slices.end())
            throw Error(errc::consistency_violation, "validated lift has no height -1 slice");
        const LaurentPoly& c_bottom = it->second;
        Exponent v0 = lexmin_support(c_bottom);
        w_lambda = mul(c_bottom, LaurentPoly::monomial(vec_neg(v0), 1));
        auto [res_u, outcome] = bsp_transform(w_u, n - 1, *w_lambda);
        node.potential = apply_unimodular(res_u, umap.inverse());
        node.polytope = apply_unimodular(outcome.polytope, umap.inverse());
        node.factor_potential = w_lambda;
        node.basis_change = u;
    } else {
        LatticePolytope f = slice(lift.polytope, *lift.width, Int(-1)).to_lattice();
        MutationOutcome mo = mutate_polytope(lift.polytope, *lift.width, f);
        node.polytope = mo.polytope;
        node.basis_change = u;
    }

    // structure of the surgered polytope: an n-simplex whose apex sits alone
    // at height -1, unit edges at the apex, opposite facet the n-fold dilate
    // of the factor polytope
    if (static_cast<int>(node.polytope.vertex_count()) != n + 1 ||
        node.polytope.affine_dim() != n)
        throw Error(errc::consistency_violation, "exotic polytope is not an n-simplex");
    const WidthVector& wv = *lift.width;
    std::vector<IntVec> apexes, others;
    for (const IntVec& v : node.polytope.vertices())
        (wv(v) == -1 ? apexes : others).push_back(v);
    if (apexes.size() != 1)
        throw Error(errc::consistency_violation, "exotic polytope has no unique apex");
    for (const IntVec& v : others)
        if (vec_gcd(vec_sub(v, apexes[0])) != 1)
            throw Error(errc::consistency_violation, "apex edge of affine length != 1");
    LatticePolytope facet = LatticePolytope::from_points(n, others);
    LatticePolytope facet_reduced = induced_coordinates(facet).first;
    LatticePolytope factor_poly =
        w_lambda ? newton(*w_lambda)
                 : induced_coordinates(normalize_factor(
                       slice(lift.polytope, wv, Int(-1)).to_lattice(), wv)).first;
    if (!are_equivalent(facet_reduced, dilate(factor_poly, Int(n))))
        throw Error(errc::consistency_violation,
                    "exotic facet is not the n-fold dilate of the factor");

    // cross-check against the augmentation lift of the base potential
    if (n >= 3) {
        const NodeArtifacts& base = lifted(t, n - 1);
        if (base.potential) {
            Exponent vb = lexmin_support(*base.potential);
            LiftResult aug = augmentation_lift(*base.potential, vb);
            node.base_monomial = vb;
            node.augmentation_index = aug.index;
            if (w_lambda && aug.full_rank && aug.lifted.rank() == n - 1)
                node.augmentation_checked =
                    are_equivalent(newton(aug.lifted), newton(*w_lambda));
        }
    }
    return node;
}

const NodeArtifacts& Pipeline::exotic(const MarkovTriple& t, int n) {
    auto key = std::make_tuple(t.a(), t.b(), t.c(), n, true);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, build_exotic(t, n)).first;
    return it->second;
}

LatticePolytope vianna_triangle(const MarkovTriple& t) {
    Pipeline pipe;
    return pipe.lifted(t, 2).polytope;
}

std::pair<std::optional<LaurentPoly>, LatticePolytope> lifted_vianna(const MarkovTriple& t,
                                                                     int n) {
    Pipeline pipe;
    const NodeArtifacts& node = pipe.lifted(t, n);
    return {node.potential, node.polytope};
}

std::pair<std::optional<LaurentPoly>, LatticePolytope> exotic_lift(const MarkovTriple& t,
                                                                   int n) {
    Pipeline pipe;
    const NodeArtifacts& node = pipe.exotic(t, n);
    return {node.potential, node.polytope};
}

FamilyReport family_report(int depth, int n, Pipeline& pipeline) {
    FamilyReport rep;
    for (const MarkovNode& mn : enumerate_tree(depth)) {
        for (int variant = 0; variant < 2; ++variant) {
            FamilyRow row;
            row.triple = mn.triple;
            row.variant = variant == 0 ? "lift" : "exotic";
            row.n = n;
            try {
                const NodeArtifacts& art = variant == 0 ? pipeline.lifted(mn.triple, n)
                                                        : pipeline.exotic(mn.triple, n);
                row.polytope = art.polytope;
                row.fp = fingerprint(art.polytope);
                row.ok = true;
            } catch (const Error& e) {
                row.error = e.what();
                rep.complete = false;
            }
            rep.rows.push_back(std::move(row));
        }
    }
    const std::size_t m = rep.rows.size();
    rep.equivalent.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) rep.equivalent[i][i] = true;
    for (std::size_t i = 0; i < m; ++i) {
        if (!rep.rows[i].ok) continue;
        for (std::size_t j = i + 1; j < m; ++j) {
            if (!rep.rows[j].ok) continue;
            bool eq = false;
            if (*rep.rows[i].fp == *rep.rows[j].fp)
                eq = are_equivalent(*rep.rows[i].polytope, *rep.rows[j].polytope);
            rep.equivalent[i][j] = rep.equivalent[j][i] = eq;
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        bool distinct = rep.rows[i].ok;
        for (std::size_t j = 0; j < m && distinct; ++j)
            if (j != i && rep.rows[j].ok && rep.equivalent[i][j]) distinct = false;
        rep.rows[i].distinct_from_all = distinct;
    }
    return rep;
}

FamilyReport family_report(int depth, int n) {
    Pipeline pipe;
    return family_report(depth, n, pipe);
}

}  // namespace mutkit
