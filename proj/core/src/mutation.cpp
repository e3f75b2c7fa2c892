#include "mutkit/mutation.hpp"

#include <algorithm>
#include <set>

namespace mutkit {

namespace {

Exponent insert_at(const Exponent& e, int axis, const Int& value) {
    Exponent out;
    out.reserve(e.size() + 1);
    for (std::size_t i = 0; i <= e.size(); ++i) {
        if (static_cast<int>(i) == axis) out.push_back(value);
        if (i < e.size()) out.push_back(e[i]);
    }
    return out;
}

IntVec lexmin_vertex(const LatticePolytope& p) { return p.vertices().front(); }

}  // namespace

LatticePolytope normalize_factor(const LatticePolytope& f, const WidthVector& w) {
    if (f.is_empty()) throw Error(errc::invalid_argument, "factor must be nonempty");
    if (f.rank() != w.rank()) throw Error(errc::rank_mismatch, "factor rank mismatch");
    Int h = w(f.vertices().front());
    for (const IntVec& v : f.vertices())
        if (w(v) != h)
            throw Error(errc::invalid_argument,
                        "factor is not contained in a translate of the width hyperplane");
    if (h == 0) return f;
    return translate(f, vec_neg(lexmin_vertex(f)));
}

std::optional<LatticePolytope> find_witness(const LatticePolytope& p, const WidthVector& w,
                                            const LatticePolytope& factor, const Int& h) {
    if (h > -1) throw Error(errc::invalid_argument, "witnesses live at negative heights");
    LatticePolytope f = normalize_factor(factor, w);
    WidthHeights wh = width_heights(p, w);
    // slices above h_max are empty, so the only witness there is empty too
    if (h > wh.h_max || h < wh.h_min) return LatticePolytope::empty(p.rank());
    RationalPolytope ph = slice(p, w, h);
    PreparedHull slice_hull(ph);
    Int k = -h;

    LatticePolytope kf = dilate(f, k);
    const int n = p.rank();

    // bounding box for candidates g with g + kF inside the slice
    IntVec lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        Rat smin = ph.vertices()[0][i], smax = smin;
        for (const RatVec& v : ph.vertices()) {
            if (v[i] < smin) smin = v[i];
            if (v[i] > smax) smax = v[i];
        }
        Int fmin = kf.vertices()[0][i], fmax = fmin;
        for (const IntVec& v : kf.vertices()) {
            if (v[i] < fmin) fmin = v[i];
            if (v[i] > fmax) fmax = v[i];
        }
        lo[i] = rat_ceil(smin) - fmin;
        hi[i] = rat_floor(smax) - fmax;
        if (lo[i] > hi[i]) {
            lo.assign(n, 0);
            hi.assign(n, -1);
            break;
        }
    }

    std::vector<IntVec> valid;
    if (hi[0] >= lo[0]) {
        IntVec cur = lo;
        while (true) {
            bool ok = true;
            for (const IntVec& fv : kf.vertices()) {
                if (!slice_hull.contains(to_rational(vec_add(cur, fv)))) {
                    ok = false;
                    break;
                }
            }
            if (ok) valid.push_back(cur);
            int i = n - 1;
            while (i >= 0) {
                ++cur[i];
                if (cur[i] <= hi[i]) break;
                cur[i] = lo[i];
                --i;
            }
            if (i < 0) break;
        }
    }

    LatticePolytope g = valid.empty() ? LatticePolytope::empty(n)
                                      : LatticePolytope::from_points(n, valid);

    // vertex condition: vert(P) at height h must sit inside G + kF
    std::vector<IntVec> height_verts;
    for (const IntVec& v : p.vertices())
        if (w(v) == h) height_verts.push_back(v);
    if (height_verts.empty()) return g;
    if (g.is_empty()) return std::nullopt;
    PreparedHull sum_hull(minkowski_sum(g, kf));
    for (const IntVec& v : height_verts)
        if (!sum_hull.contains(to_rational(v))) return std::nullopt;
    return g;
}

MutationOutcome mutate_polytope(const LatticePolytope& p, const WidthVector& w,
                                const LatticePolytope& factor) {
    if (p.is_empty()) throw Error(errc::empty_input, "cannot mutate the empty polytope");
    LatticePolytope f = normalize_factor(factor, w);
    WidthHeights wh = width_heights(p, w);

    std::map<Int, LatticePolytope> witnesses;
    std::vector<RatVec> points;
    for (Int h = wh.h_min; h <= -1; h += 1) {
        auto g = find_witness(p, w, f, h);
        if (!g)
            throw MutationUndefinedError(h, "no witness at height " + h.get_str());
        for (const IntVec& v : g->vertices()) points.push_back(to_rational(v));
        witnesses.emplace(h, *g);
    }
    Int from = wh.h_min > 0 ? wh.h_min : Int(0);
    for (Int h = from; h <= wh.h_max; h += 1) {
        RationalPolytope ph = slice(p, w, h);
        for (const RatVec& sv : ph.vertices())
            for (const IntVec& fv : f.vertices()) {
                RatVec x(sv.size());
                for (std::size_t i = 0; i < sv.size(); ++i) x[i] = sv[i] + Rat(h * fv[i]);
                points.push_back(std::move(x));
            }
    }
    RationalPolytope raw = RationalPolytope::from_points(p.rank(), points);
    LatticePolytope result = raw.to_lattice();  // throws NonIntegralResult
    return MutationOutcome{std::move(result), MutationSpec{w, f, std::move(witnesses)},
                           std::nullopt};
}

std::pair<LaurentPoly, MutationOutcome> bsp_transform(const LaurentPoly& w, int axis,
                                                      const LaurentPoly& factor) {
    LaurentPoly algebraic = substitute_axis(w, axis, factor);

    // dual width vector of the axis; the factor Newton polytope embeds into
    // its hyperplane with a zero axis coordinate
    IntVec wv(w.rank(), 0);
    wv[axis] = 1;
    WidthVector width(wv);
    std::vector<IntVec> fpts;
    LatticePolytope factor_newton = newton(factor);
    for (const IntVec& e : factor_newton.vertices()) fpts.push_back(insert_at(e, axis, 0));
    LatticePolytope f_embedded = LatticePolytope::from_points(w.rank(), fpts);

    MutationOutcome outcome = mutate_polytope(newton(w), width, f_embedded);
    LatticePolytope algebraic_newton = newton(algebraic);
    if (!(algebraic_newton == outcome.polytope))
        throw Error(errc::consistency_violation,
                    "Newton polytope of the substitution disagrees with the mutation");
    outcome.consistency = ConsistencyRecord{algebraic_newton, true};
    return {std::move(algebraic), std::move(outcome)};
}

namespace {

// next vector in the box [-b, b]^n, lexicographic; false when exhausted
bool next_in_box(IntVec& v, const Int& b) {
    int i = static_cast<int>(v.size()) - 1;
    while (i >= 0) {
        ++v[i];
        if (v[i] <= b) return true;
        v[i] = -b;
        --i;
    }
    return false;
}

bool lex_positive(const IntVec& v) {
    for (const Int& x : v) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

}  // namespace

std::vector<MutationSpec> search_mutations(const LatticePolytope& p, const SearchOptions& opts) {
    if (p.rank() > 3)
        throw Error(errc::unsupported_rank, "mutation search implemented for rank <= 3");
    std::vector<MutationSpec> out;
    if (p.is_empty() || p.vertex_count() == 1) return out;
    const int n = p.rank();
    long budget = opts.node_budget;

    IntVec wvec(n, -opts.w_bound);
    bool more = true;
    while (more) {
        IntVec rep = wvec;
        more = next_in_box(wvec, opts.w_bound);
        if (!lex_positive(rep) || !is_primitive(rep)) continue;
        for (int sign = 0; sign < 2; ++sign) {
            IntVec cand = sign == 0 ? rep : vec_neg(rep);
            WidthVector w(cand);
            WidthHeights wh = width_heights(p, w);
            if (wh.width == 0) continue;
            RationalPolytope bottom = slice(p, w, wh.h_min);
            std::vector<IntVec> pts = lattice_points(bottom);
            if (pts.size() < 2) continue;  // only the trivial factor
            std::sort(pts.begin(), pts.end());
            const IntVec& base = pts.front();
            std::vector<IntVec> diffs;
            for (const IntVec& q : pts) diffs.push_back(vec_sub(q, base));

            // candidate factors: hulls of small subsets of the translated
            // bottom-slice points, the full slice first
            std::vector<LatticePolytope> factors;
            std::set<std::vector<IntVec>> seen;
            LatticePolytope full = LatticePolytope::from_points(n, diffs);
            if (static_cast<int>(full.vertex_count()) <= opts.factor_vertex_bound) {
                factors.push_back(full);
                seen.insert(full.vertices());
            }
            const int m = static_cast<int>(diffs.size());
            const int kmax = std::min(m, opts.factor_vertex_bound);
            std::vector<int> comb;
            std::function<void(int, int)> gen = [&](int start, int k) {
                if (k == 0) {
                    std::vector<IntVec> sub;
                    for (int idx : comb) sub.push_back(diffs[idx]);
                    LatticePolytope f = LatticePolytope::from_points(n, sub);
                    if (seen.insert(f.vertices()).second) factors.push_back(f);
                    return;
                }
                for (int i = start; i <= m - k; ++i) {
                    comb.push_back(i);
                    gen(i + 1, k - 1);
                    comb.pop_back();
                }
            };
            for (int k = 1; k <= kmax; ++k) gen(0, k);

            for (const LatticePolytope& f : factors) {
                if (f.vertex_count() == 1 && f.vertices()[0] == IntVec(n, 0)) continue;
                if (--budget < 0)
                    throw Error(errc::search_budget_exceeded,
                                "mutation search exceeded its node budget");
                bool ok = true;
                std::map<Int, LatticePolytope> wits;
                for (Int h = wh.h_min; h <= -1 && ok; h += 1) {
                    auto g = find_witness(p, w, f, h);
                    if (!g)
                        ok = false;
                    else
                        wits.emplace(h, *g);
                }
                if (!ok) continue;
                try {
                    MutationOutcome mo = mutate_polytope(p, w, f);
                    if (mo.polytope == p) continue;
                    out.push_back(MutationSpec{w, f, std::move(wits)});
                } catch (const Error&) {
                    continue;
                }
            }
        }
    }
    return out;
}

std::vector<MutationSpec> search_mutations(const LatticePolytope& p, const Int& w_bound,
                                           int factor_vertex_bound) {
    SearchOptions opts;
    opts.w_bound = w_bound;
    opts.factor_vertex_bound = factor_vertex_bound;
    return search_mutations(p, opts);
}

}  // namespace mutkit
