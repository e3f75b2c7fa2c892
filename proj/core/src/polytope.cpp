#include "mutkit/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "mutkit/laurent.hpp"

namespace mutkit {

namespace {

// ---------------------------------------------------------------------------
// Exact LP feasibility: is p a convex combination of pts[ids]?
// Phase-1 simplex with Bland's rule; all arithmetic in Q.
// ---------------------------------------------------------------------------
bool conv_feasible(const RatVec& p, const std::vector<RatVec>& pts,
                   const std::vector<int>& ids) {
    const int d = static_cast<int>(p.size());
    const int m = d + 1;
    const int n = static_cast<int>(ids.size());
    if (n == 0) return false;
    const int cols = n + m;  // points, then artificials
    std::vector<RatVec> t(m, RatVec(cols + 1, 0));
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j < n; ++j) t[r][j] = (r < d) ? pts[ids[j]][r] : Rat(1);
        t[r][cols] = (r < d) ? p[r] : Rat(1);
        if (t[r][cols] < 0)
            for (int j = 0; j <= cols; ++j) t[r][j] = -t[r][j];
        t[r][n + r] = 1;
    }
    std::vector<int> basis(m);
    for (int r = 0; r < m; ++r) basis[r] = n + r;

    auto cost = [&](int j) { return j >= n ? 1 : 0; };
    while (true) {
        // reduced costs
        int entering = -1;
        for (int j = 0; j < cols && entering < 0; ++j) {
            Rat rc = cost(j);
            for (int r = 0; r < m; ++r)
                if (cost(basis[r]) != 0) rc -= t[r][j];
            if (rc < 0) entering = j;
        }
        if (entering < 0) break;
        int leave = -1;
        Rat best;
        for (int r = 0; r < m; ++r) {
            if (t[r][entering] <= 0) continue;
            Rat ratio = t[r][cols] / t[r][entering];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) break;  // cannot happen in phase 1, defensive exit
        Rat piv = t[leave][entering];
        for (int j = 0; j <= cols; ++j) t[leave][j] /= piv;
        for (int r = 0; r < m; ++r) {
            if (r == leave || t[r][entering] == 0) continue;
            Rat f = t[r][entering];
            for (int j = 0; j <= cols; ++j) t[r][j] -= f * t[leave][j];
        }
        basis[leave] = entering;
    }
    Rat obj = 0;
    for (int r = 0; r < m; ++r)
        if (basis[r] >= n) obj += t[r][cols];
    return obj == 0;
}

// ---------------------------------------------------------------------------
// Affine frame: base point + independent directions, with exact projection
// onto affine coordinates.
// ---------------------------------------------------------------------------
struct AffineFrame {
    RatVec base;
    RatMat dirs;                  // d rows of length n
    std::vector<int> pivot_cols;  // coordinate columns where dirs is invertible
    RatMat inv;                   // inverse of dirs[:, pivot_cols] transposed

    int dim() const { return static_cast<int>(dirs.size()); }

    RatVec project(const RatVec& p) const {
        const int d = dim();
        RatVec rhs(d);
        for (int i = 0; i < d; ++i) rhs[i] = p[pivot_cols[i]] - base[pivot_cols[i]];
        RatVec t(d, 0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) t[i] += inv[i][j] * rhs[j];
        return t;
    }

    bool lies_in_hull(const RatVec& p) const {
        RatVec t = project(p);
        for (std::size_t c = 0; c < base.size(); ++c) {
            Rat acc = base[c];
            for (int k = 0; k < dim(); ++k) acc += t[k] * dirs[k][c];
            if (acc != p[c]) return false;
        }
        return true;
    }
};

AffineFrame affine_frame(const std::vector<RatVec>& pts) {
    AffineFrame fr;
    fr.base = pts.front();
    const std::size_t n = fr.base.size();
    RatMat reduced;                // row-echelon copies of the directions
    std::vector<int> pivot_of;     // pivot column of each reduced row
    for (const RatVec& p : pts) {
        RatVec d = vec_sub(p, fr.base);
        for (std::size_t r = 0; r < reduced.size(); ++r) {
            if (d[pivot_of[r]] == 0) continue;
            Rat f = d[pivot_of[r]] / reduced[r][pivot_of[r]];
            for (std::size_t c = 0; c < n; ++c) d[c] -= f * reduced[r][c];
        }
        int piv = -1;
        for (std::size_t c = 0; c < n; ++c)
            if (d[c] != 0) {
                piv = static_cast<int>(c);
                break;
            }
        if (piv < 0) continue;
        reduced.push_back(d);
        pivot_of.push_back(piv);
        fr.dirs.push_back(vec_sub(p, fr.base));
        fr.pivot_cols.push_back(piv);
    }
    const int d = fr.dim();
    if (d > 0) {
        RatMat sq(d, RatVec(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) sq[i][j] = fr.dirs[j][fr.pivot_cols[i]];
        // invert sq (rows indexed by pivot coordinate, columns by direction)
        RatMat a = sq, inv(d, RatVec(d, 0));
        for (int i = 0; i < d; ++i) inv[i][i] = 1;
        for (int c = 0; c < d; ++c) {
            int piv = c;
            while (a[piv][c] == 0) ++piv;
            std::swap(a[piv], a[c]);
            std::swap(inv[piv], inv[c]);
            Rat dd = a[c][c];
            for (int j = 0; j < d; ++j) {
                a[c][j] /= dd;
                inv[c][j] /= dd;
            }
            for (int i = 0; i < d; ++i) {
                if (i == c || a[i][c] == 0) continue;
                Rat f = a[i][c];
                for (int j = 0; j < d; ++j) {
                    a[i][j] -= f * a[c][j];
                    inv[i][j] -= f * inv[c][j];
                }
            }
        }
        // t = inv * rhs with rhs ordered by pivot_cols, so inv must be the
        // inverse of the matrix mapping t to rhs: rhs_i = sum_j t_j *
        // dirs[j][pivot_cols[i]] = (sq t)_i.  The inversion above is of sq.
        fr.inv = inv;
    }
    return fr;
}

std::vector<int> dedupe_points(const std::vector<RatVec>& pts) {
    std::map<RatVec, int> seen;
    std::vector<int> ids;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (seen.emplace(pts[i], static_cast<int>(i)).second)
            ids.push_back(static_cast<int>(i));
    return ids;
}

// 2D monotone chain on projected coordinates. Returns hull ids in CCW order,
// collinear interior points dropped.
std::vector<int> chain_2d(const std::vector<RatVec>& proj, std::vector<int> ids) {
    auto cmp = [&](int a, int b) { return proj[a] < proj[b]; };
    std::sort(ids.begin(), ids.end(), cmp);
    auto cross = [&](int o, int a, int b) -> Rat {
        return (proj[a][0] - proj[o][0]) * (proj[b][1] - proj[o][1]) -
               (proj[a][1] - proj[o][1]) * (proj[b][0] - proj[o][0]);
    };
    std::vector<int> h;
    for (int id : ids) {
        while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), id) <= 0) h.pop_back();
        h.push_back(id);
    }
    std::size_t lower = h.size() + 1;
    for (auto it = ids.rbegin() + 1; it != ids.rend(); ++it) {
        while (h.size() >= lower && cross(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
        h.push_back(*it);
    }
    h.pop_back();
    return h;  // CCW cycle
}

struct ProjFacet {
    IntVec normal;  // outward, primitive, in projected coordinates
    Rat rhs;
    std::vector<int> verts;  // global ids, sorted
};

IntVec primitive_integer(const RatVec& v, bool lex_positive) {
    Int l = 1;
    for (const Rat& x : v) {
        Int d = x.get_den();
        l = l / int_gcd(l, d) * d;
    }
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(l);
        out[i] = s.get_num();
    }
    Int g = vec_gcd(out);
    if (g > 1)
        for (Int& x : out) x /= g;
    if (lex_positive) {
        for (const Int& x : out) {
            if (x == 0) continue;
            if (x < 0) out = vec_neg(out);
            break;
        }
    }
    return out;
}

// Facets of the full-dimensional hull of proj[ids] in Q^d, d >= 1.
// `ids` must already be hull vertices for d >= 3.
std::vector<ProjFacet> proj_facets(const std::vector<RatVec>& proj, const std::vector<int>& ids,
                                   int d) {
    std::vector<ProjFacet> out;
    if (d == 1) {
        int lo = ids[0], hi = ids[0];
        for (int id : ids) {
            if (proj[id][0] < proj[lo][0]) lo = id;
            if (proj[id][0] > proj[hi][0]) hi = id;
        }
        out.push_back({IntVec{-1}, -proj[lo][0], {lo}});
        out.push_back({IntVec{1}, proj[hi][0], {hi}});
        return out;
    }
    if (d == 2) {
        std::vector<int> cyc = chain_2d(proj, ids);
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            RatVec nrm{proj[b][1] - proj[a][1], proj[a][0] - proj[b][0]};
            IntVec n = primitive_integer(nrm, false);
            // keep a's orientation: outward for CCW is (dy, -dx)
            if (Rat(n[0]) * nrm[0] + Rat(n[1]) * nrm[1] < 0) n = vec_neg(n);
            Rat rhs = Rat(n[0]) * proj[a][0] + Rat(n[1]) * proj[a][1];
            std::vector<int> fv;
            for (int id : ids) {
                if (Rat(n[0]) * proj[id][0] + Rat(n[1]) * proj[id][1] == rhs) fv.push_back(id);
            }
            std::sort(fv.begin(), fv.end());
            out.push_back({n, rhs, fv});
        }
        // collinear extra points on an edge produce duplicates
        std::sort(out.begin(), out.end(),
                  [](const ProjFacet& x, const ProjFacet& y) { return x.verts < y.verts; });
        out.erase(std::unique(out.begin(), out.end(),
                              [](const ProjFacet& x, const ProjFacet& y) {
                                  return x.verts == y.verts;
                              }),
                  out.end());
        return out;
    }

    // d >= 3: enumerate supporting hyperplanes through d-subsets of vertices.
    const int m = static_cast<int>(ids.size());
    std::set<std::pair<IntVec, Rat>> seen;
    std::vector<int> comb(d);
    auto handle = [&]() {
        // nullspace of the (d-1) x d direction matrix
        RatMat rows;
        for (int k = 1; k < d; ++k)
            rows.push_back(vec_sub(proj[ids[comb[k]]], proj[ids[comb[0]]]));
        // eliminate
        RatMat red;
        std::vector<int> pivs;
        for (RatVec r : rows) {
            for (std::size_t i = 0; i < red.size(); ++i) {
                if (r[pivs[i]] == 0) continue;
                Rat f = r[pivs[i]] / red[i][pivs[i]];
                for (int c = 0; c < d; ++c) r[c] -= f * red[i][c];
            }
            int piv = -1;
            for (int c = 0; c < d; ++c)
                if (r[c] != 0) {
                    piv = c;
                    break;
                }
            if (piv >= 0) {
                red.push_back(r);
                pivs.push_back(piv);
            }
        }
        if (static_cast<int>(red.size()) != d - 1) return;  // degenerate subset
        // back-substitute for a nullspace generator
        RatVec nrm(d, 0);
        int free_col = 0;
        std::vector<bool> is_piv(d, false);
        for (int p : pivs) is_piv[p] = true;
        while (is_piv[free_col]) ++free_col;
        nrm[free_col] = 1;
        for (int i = static_cast<int>(red.size()) - 1; i >= 0; --i) {
            Rat acc = 0;
            for (int c = 0; c < d; ++c)
                if (c != pivs[i]) acc += red[i][c] * nrm[c];
            nrm[pivs[i]] = -acc / red[i][pivs[i]];
        }
        IntVec n = primitive_integer(nrm, true);
        Rat rhs = 0;
        for (int c = 0; c < d; ++c) rhs += Rat(n[c]) * proj[ids[comb[0]]][c];
        if (!seen.emplace(n, rhs).second) return;
        bool le = true, ge = true;
        for (int id : ids) {
            Rat v = 0;
            for (int c = 0; c < d; ++c) v += Rat(n[c]) * proj[id][c];
            if (v > rhs) le = false;
            if (v < rhs) ge = false;
            if (!le && !ge) return;
        }
        IntVec outward = le ? n : vec_neg(n);
        Rat orhs = le ? rhs : -rhs;
        std::vector<int> fv;
        for (int id : ids) {
            Rat v = 0;
            for (int c = 0; c < d; ++c) v += Rat(outward[c]) * proj[id][c];
            if (v == orhs) fv.push_back(id);
        }
        std::sort(fv.begin(), fv.end());
        out.push_back({outward, orhs, fv});
    };
    // iterate d-combinations
    for (int i = 0; i < d; ++i) comb[i] = i;
    if (m >= d) {
        while (true) {
            handle();
            int i = d - 1;
            while (i >= 0 && comb[i] == m - d + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ProjFacet& x, const ProjFacet& y) { return x.verts < y.verts; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const ProjFacet& x, const ProjFacet& y) {
                              return x.verts == y.verts;
                          }),
              out.end());
    return out;
}

// Hull vertex ids among pts[ids] (global ids, sorted).
std::vector<int> hull_vertex_ids(const std::vector<RatVec>& pts, std::vector<int> ids) {
    if (ids.empty()) return ids;
    std::vector<RatVec> sub;
    sub.reserve(ids.size());
    for (int id : ids) sub.push_back(pts[id]);
    AffineFrame fr = affine_frame(sub);
    const int d = fr.dim();
    std::vector<int> out;
    if (d == 0) {
        out.push_back(*std::min_element(ids.begin(), ids.end(), [&](int a, int b) {
            return pts[a] < pts[b];
        }));
        return out;
    }
    std::vector<RatVec> proj(pts.size());
    for (int id : ids) proj[id] = fr.project(pts[id]);
    if (d == 1) {
        int lo = ids[0], hi = ids[0];
        for (int id : ids) {
            if (proj[id][0] < proj[lo][0]) lo = id;
            if (proj[id][0] > proj[hi][0]) hi = id;
        }
        out = {lo, hi};
    } else if (d == 2) {
        out = chain_2d(proj, ids);
    } else {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            std::vector<int> others;
            RatVec pp = proj[ids[i]];
            for (std::size_t j = 0; j < ids.size(); ++j) {
                if (j == i || proj[ids[j]] == pp) continue;  // duplicates
                others.push_back(ids[j]);
            }
            std::vector<RatVec> oproj;
            std::vector<int> local;
            for (std::size_t j = 0; j < others.size(); ++j) local.push_back(static_cast<int>(j));
            for (int id : others) oproj.push_back(proj[id]);
            if (!conv_feasible(pp, oproj, local)) out.push_back(ids[i]);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Proper faces by dimension (vertex-id sets), recursively from facets.
void collect_faces(const std::vector<RatVec>& pts, const std::vector<int>& ids,
                   std::map<int, std::set<std::vector<int>>>& out) {
    std::vector<RatVec> sub;
    for (int id : ids) sub.push_back(pts[id]);
    AffineFrame fr = affine_frame(sub);
    const int d = fr.dim();
    if (d == 0) {
        out[0].insert({ids[0]});
        return;
    }
    std::vector<RatVec> proj(pts.size());
    for (int id : ids) proj[id] = fr.project(pts[id]);
    if (d == 1) {
        int lo = ids[0], hi = ids[0];
        for (int id : ids) {
            if (proj[id][0] < proj[lo][0]) lo = id;
            if (proj[id][0] > proj[hi][0]) hi = id;
        }
        out[0].insert({lo});
        out[0].insert({hi});
        return;
    }
    for (const ProjFacet& f : proj_facets(proj, ids, d)) {
        std::vector<int> fverts = f.verts;
        if (!out[d - 1].insert(fverts).second) continue;
        collect_faces(pts, fverts, out);
    }
}

std::vector<RatVec> to_rat_points(const std::vector<IntVec>& pts) {
    std::vector<RatVec> out;
    out.reserve(pts.size());
    for (const IntVec& p : pts) out.push_back(to_rational(p));
    return out;
}

void check_rank(int rank, const std::vector<RatVec>& pts) {
    for (const RatVec& p : pts)
        if (static_cast<int>(p.size()) != rank)
            throw Error(errc::rank_mismatch, "point length does not match rank");
}

std::map<int, std::set<std::vector<int>>> faces_of(const std::vector<RatVec>& verts) {
    std::vector<int> ids(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) ids[i] = static_cast<int>(i);
    std::map<int, std::set<std::vector<int>>> out;
    collect_faces(verts, ids, out);
    return out;
}

Int edge_length(const IntVec& u, const IntVec& v) { return vec_gcd(vec_sub(u, v)); }

// Triangulation of a full-dimensional polytope, fanned from the first vertex
// at every level; returns tuples of vertex indices.
std::vector<std::vector<int>> triangulate(const std::vector<RatVec>& pts,
                                          const std::vector<int>& ids) {
    std::vector<RatVec> sub;
    for (int id : ids) sub.push_back(pts[id]);
    AffineFrame fr = affine_frame(sub);
    const int d = fr.dim();
    if (static_cast<int>(ids.size()) == d + 1) return {ids};
    if (d == 1) {
        int lo = ids[0], hi = ids[0];
        std::vector<RatVec> proj(pts.size());
        for (int id : ids) proj[id] = fr.project(pts[id]);
        for (int id : ids) {
            if (proj[id][0] < proj[lo][0]) lo = id;
            if (proj[id][0] > proj[hi][0]) hi = id;
        }
        return {{lo, hi}};
    }
    std::vector<RatVec> proj(pts.size());
    for (int id : ids) proj[id] = fr.project(pts[id]);
    const int apex = ids[0];
    std::vector<std::vector<int>> out;
    for (const ProjFacet& f : proj_facets(proj, ids, d)) {
        if (std::find(f.verts.begin(), f.verts.end(), apex) != f.verts.end()) continue;
        for (std::vector<int> s : triangulate(pts, f.verts)) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

WidthVector::WidthVector(IntVec w) : w_(std::move(w)) {
    bool nonzero = false;
    for (const Int& x : w_) nonzero = nonzero || x != 0;
    if (!nonzero) throw Error(errc::invalid_argument, "width vector must be nonzero");
    if (!is_primitive(w_))
        throw Error(errc::invalid_argument, "width vector must be primitive (gcd 1)");
}

WidthVector WidthVector::negated() const { return WidthVector(vec_neg(w_)); }

LatticePolytope LatticePolytope::from_points(int rank, std::vector<IntVec> points) {
    if (points.empty()) throw Error(errc::empty_input, "hull of an empty point set");
    std::vector<RatVec> rpts = to_rat_points(points);
    check_rank(rank, rpts);
    std::vector<int> ids = dedupe_points(rpts);
    ids = hull_vertex_ids(rpts, ids);
    LatticePolytope p(rank);
    for (int id : ids) p.vertices_.push_back(points[id]);
    std::sort(p.vertices_.begin(), p.vertices_.end());
    return p;
}

int LatticePolytope::affine_dim() const {
    if (vertices_.empty()) return -1;
    return affine_frame(to_rat_points(vertices_)).dim();
}

RationalPolytope RationalPolytope::from_points(int rank, std::vector<RatVec> points) {
    if (points.empty()) throw Error(errc::empty_input, "hull of an empty point set");
    check_rank(rank, points);
    std::vector<int> ids = dedupe_points(points);
    ids = hull_vertex_ids(points, ids);
    RationalPolytope p(rank);
    for (int id : ids) p.vertices_.push_back(points[id]);
    std::sort(p.vertices_.begin(), p.vertices_.end());
    return p;
}

RationalPolytope RationalPolytope::from_lattice(const LatticePolytope& p) {
    RationalPolytope out(p.rank());
    for (const IntVec& v : p.vertices()) out.vertices_.push_back(to_rational(v));
    return out;
}

int RationalPolytope::affine_dim() const {
    if (vertices_.empty()) return -1;
    return affine_frame(vertices_).dim();
}

bool RationalPolytope::is_integral() const {
    for (const RatVec& v : vertices_)
        if (!mutkit::is_integral(v)) return false;
    return true;
}

LatticePolytope RationalPolytope::to_lattice() const {
    if (!is_integral())
        throw Error(errc::non_integral_result, "polytope has a non-integral vertex");
    std::vector<IntVec> pts;
    for (const RatVec& v : vertices_) pts.push_back(to_integral(v));
    return LatticePolytope::from_points(rank_, pts);
}

LatticePolytope hull(int rank, const std::vector<IntVec>& points) {
    return LatticePolytope::from_points(rank, points);
}

RationalPolytope hull_rational(int rank, const std::vector<RatVec>& points) {
    return RationalPolytope::from_points(rank, points);
}

WidthHeights width_heights(const LatticePolytope& p, const WidthVector& w) {
    if (w.rank() != p.rank()) throw Error(errc::rank_mismatch, "width vector rank mismatch");
    if (p.is_empty()) throw Error(errc::empty_input, "width of the empty polytope");
    WidthHeights out;
    bool first = true;
    for (const IntVec& v : p.vertices()) {
        Int h = w(v);
        if (first || h < out.h_min) out.h_min = h;
        if (first || h > out.h_max) out.h_max = h;
        first = false;
    }
    out.width = out.h_max - out.h_min;
    return out;
}

std::vector<std::array<IntVec, 2>> edge_list(const LatticePolytope& p) {
    std::vector<std::array<IntVec, 2>> out;
    const auto& verts = p.vertices();
    if (verts.size() < 2) return out;
    int d = p.affine_dim();
    if (d == 1) {
        out.push_back({verts.front(), verts.back()});
        return out;
    }
    auto faces = faces_of(to_rat_points(verts));
    for (const auto& e : faces[1]) {
        out.push_back({verts[e[0]], verts[e[1]]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

RationalPolytope slice(const LatticePolytope& p, const WidthVector& w, const Int& h) {
    WidthHeights wh = width_heights(p, w);
    if (h < wh.h_min || h > wh.h_max)
        throw Error(errc::height_out_of_range,
                    "slice height " + h.get_str() + " outside [" + wh.h_min.get_str() + ", " +
                        wh.h_max.get_str() + "]");
    std::vector<RatVec> pts;
    for (const IntVec& v : p.vertices())
        if (w(v) == h) pts.push_back(to_rational(v));
    for (const auto& e : edge_list(p)) {
        Int hu = w(e[0]), hv = w(e[1]);
        if ((hu < h && h < hv) || (hv < h && h < hu)) {
            Rat t = Rat(h - hu) / Rat(hv - hu);
            RatVec x(p.rank());
            for (int i = 0; i < p.rank(); ++i) x[i] = Rat(e[0][i]) + t * Rat(e[1][i] - e[0][i]);
            pts.push_back(std::move(x));
        }
    }
    return RationalPolytope::from_points(p.rank(), pts);
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
    if (a.rank() != b.rank()) throw Error(errc::rank_mismatch, "Minkowski sum rank mismatch");
    if (a.is_empty() || b.is_empty()) return LatticePolytope::empty(a.rank());
    std::vector<IntVec> pts;
    for (const IntVec& u : a.vertices())
        for (const IntVec& v : b.vertices()) pts.push_back(vec_add(u, v));
    return LatticePolytope::from_points(a.rank(), pts);
}

RationalPolytope minkowski_sum(const RationalPolytope& a, const RationalPolytope& b) {
    if (a.rank() != b.rank()) throw Error(errc::rank_mismatch, "Minkowski sum rank mismatch");
    if (a.is_empty() || b.is_empty()) return RationalPolytope::empty(a.rank());
    std::vector<RatVec> pts;
    for (const RatVec& u : a.vertices())
        for (const RatVec& v : b.vertices()) pts.push_back(vec_add(u, v));
    return RationalPolytope::from_points(a.rank(), pts);
}

LatticePolytope dilate(const LatticePolytope& p, const Int& m) {
    if (m < 1) throw Error(errc::invalid_argument, "dilation factor must be >= 1");
    if (p.is_empty()) return p;
    std::vector<IntVec> pts;
    for (const IntVec& v : p.vertices()) pts.push_back(vec_scale(m, v));
    return LatticePolytope::from_points(p.rank(), pts);
}

FanoReport is_fano(const LatticePolytope& p) {
    if (p.affine_dim() != p.rank())
        throw Error(errc::not_full_dimensional, "Fano test needs a full-dimensional polytope");
    FanoReport rep;
    PreparedHull ph(p);
    rep.origin_interior = ph.contains_interior(RatVec(p.rank(), 0));
    rep.vertices_primitive = true;
    for (const IntVec& v : p.vertices()) {
        if (!is_primitive(v)) {
            rep.vertices_primitive = false;
            rep.detail = "non-primitive vertex";
            break;
        }
    }
    if (!rep.origin_interior && rep.detail.empty()) rep.detail = "origin not strictly interior";
    rep.fano = rep.origin_interior && rep.vertices_primitive;
    return rep;
}

std::vector<Int> affine_edge_lengths(const LatticePolytope& p) {
    if (p.rank() > 3)
        throw Error(errc::unsupported_rank, "edge enumeration implemented for rank <= 3");
    std::vector<Int> out;
    for (const auto& e : edge_list(p)) out.push_back(edge_length(e[0], e[1]));
    std::sort(out.begin(), out.end());
    return out;
}

Int normalized_volume(const LatticePolytope& p) {
    const int n = p.rank();
    if (p.affine_dim() != n)
        throw Error(errc::not_full_dimensional, "volume needs a full-dimensional polytope");
    std::vector<RatVec> pts = to_rat_points(p.vertices());
    std::vector<int> ids(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) ids[i] = static_cast<int>(i);
    Int vol = 0;
    for (const auto& s : triangulate(pts, ids)) {
        IntMat m;
        for (std::size_t k = 1; k < s.size(); ++k)
            m.push_back(vec_sub(p.vertices()[s[k]], p.vertices()[s[0]]));
        vol += abs(determinant(m));
    }
    return vol;
}

// ---------------------------------------------------------------------------

PreparedHull::PreparedHull(const RationalPolytope& p) {
    if (!p.is_empty()) build(p.vertices(), p.rank());
}

PreparedHull::PreparedHull(const LatticePolytope& p) {
    if (!p.is_empty()) build(to_rat_points(p.vertices()), p.rank());
}

void PreparedHull::build(const std::vector<RatVec>& verts, int rank) {
    empty_ = false;
    verts_ = verts;
    AffineFrame fr = affine_frame(verts);
    const int d = fr.dim();

    // affine hull equations from the integer kernel of the direction span
    if (d < rank) {
        IntMat kern;
        if (d == 0) {
            kern = identity_matrix(rank);
        } else {
            IntMat dirs;
            for (const RatVec& u : fr.dirs) dirs.push_back(primitive_integer(u, true));
            kern = integer_kernel(dirs);
        }
        for (const IntVec& k : kern) {
            RatVec eq;
            eq.reserve(rank + 1);
            Rat rhs = 0;
            for (int i = 0; i < rank; ++i) {
                eq.emplace_back(k[i]);
                rhs += Rat(k[i]) * fr.base[i];
            }
            eq.push_back(rhs);
            equations_.push_back(std::move(eq));
        }
    }
    if (d == 0) return;  // equations pin the point exactly

    std::vector<RatVec> proj;
    std::vector<int> ids;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        proj.push_back(fr.project(verts[i]));
        ids.push_back(static_cast<int>(i));
    }
    for (const ProjFacet& f : proj_facets(proj, ids, d)) {
        // pull a'·t(x) <= rhs back to ambient coordinates:
        // t(x) = inv * (x[pivot] - base[pivot])
        RatVec amb(rank + 1, 0);
        Rat rhs = f.rhs;
        for (int i = 0; i < d; ++i) {
            if (f.normal[i] == 0) continue;
            for (int j = 0; j < d; ++j) {
                Rat c = Rat(f.normal[i]) * fr.inv[i][j];
                amb[fr.pivot_cols[j]] += c;
                rhs += c * fr.base[fr.pivot_cols[j]];
            }
        }
        amb[rank] = rhs;
        inequalities_.push_back(std::move(amb));
    }
}

bool PreparedHull::contains(const RatVec& x) const {
    if (empty_) return false;
    const int n = static_cast<int>(x.size());
    for (const RatVec& eq : equations_) {
        Rat acc = 0;
        for (int i = 0; i < n; ++i) acc += eq[i] * x[i];
        if (acc != eq[n]) return false;
    }
    if (inequalities_.empty()) return x == verts_.front() || equations_.empty();
    for (const RatVec& a : inequalities_) {
        Rat acc = 0;
        for (int i = 0; i < n; ++i) acc += a[i] * x[i];
        if (acc > a[n]) return false;
    }
    return true;
}

bool PreparedHull::contains_interior(const RatVec& x) const {
    if (empty_ || !equations_.empty()) return false;  // not full-dimensional
    const int n = static_cast<int>(x.size());
    for (const RatVec& a : inequalities_) {
        Rat acc = 0;
        for (int i = 0; i < n; ++i) acc += a[i] * x[i];
        if (acc >= a[n]) return false;
    }
    return true;
}

bool contains(const LatticePolytope& p, const RatVec& point) {
    return PreparedHull(p).contains(point);
}

bool contains(const RationalPolytope& p, const RatVec& point) {
    return PreparedHull(p).contains(point);
}

// ---------------------------------------------------------------------------

std::vector<IntVec> lattice_points(const RationalPolytope& p, const Int& cap) {
    std::vector<IntVec> out;
    if (p.is_empty()) return out;
    const int n = p.rank();
    IntVec lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        Rat mn = p.vertices()[0][i], mx = mn;
        for (const RatVec& v : p.vertices()) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        lo[i] = rat_ceil(mn);
        hi[i] = rat_floor(mx);
        if (lo[i] > hi[i]) return out;
    }
    Int count = 1;
    for (int i = 0; i < n; ++i) count *= hi[i] - lo[i] + 1;
    if (count > cap)
        throw Error(errc::too_large, "bounding box has " + count.get_str() +
                                         " lattice points, cap is " + cap.get_str());
    PreparedHull ph(p);
    IntVec cur = lo;
    while (true) {
        if (ph.contains(to_rational(cur))) out.push_back(cur);
        int i = n - 1;
        while (i >= 0) {
            ++cur[i];
            if (cur[i] <= hi[i]) break;
            cur[i] = lo[i];
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

std::vector<IntVec> lattice_points(const LatticePolytope& p, const Int& cap) {
    return lattice_points(RationalPolytope::from_lattice(p), cap);
}

Fingerprint fingerprint(const LatticePolytope& p, const Int& enumeration_cap) {
    const int n = p.rank();
    if (n > 4) throw Error(errc::unsupported_rank, "fingerprint implemented for rank <= 4");
    if (p.affine_dim() != n)
        throw Error(errc::not_full_dimensional, "fingerprint needs a full-dimensional polytope");
    Fingerprint fp;
    fp.rank = n;
    fp.vertex_count = p.vertex_count();
    auto faces = faces_of(to_rat_points(p.vertices()));
    fp.f_vector.assign(n, 0);
    for (int k = 0; k < n; ++k) fp.f_vector[k] = faces[k].size();
    for (const auto& e : faces[1])
        fp.edge_lengths.push_back(edge_length(p.vertices()[e[0]], p.vertices()[e[1]]));
    std::sort(fp.edge_lengths.begin(), fp.edge_lengths.end());
    fp.normalized_volume = normalized_volume(p);
    fp.points_p = Int(lattice_points(p, enumeration_cap).size());
    fp.points_2p = Int(lattice_points(dilate(p, 2), enumeration_cap).size());
    PreparedHull ph(p);
    Int interior = 0;
    for (const IntVec& pt : lattice_points(p, enumeration_cap))
        if (ph.contains_interior(to_rational(pt))) ++interior;
    fp.interior_points = interior;
    return fp;
}

// ---------------------------------------------------------------------------

LatticePolytope apply_unimodular(const LatticePolytope& p, const UnimodularMap& m) {
    if (m.rank() != p.rank()) throw Error(errc::rank_mismatch, "map rank mismatch");
    if (p.is_empty()) return p;
    std::vector<IntVec> pts;
    for (const IntVec& v : p.vertices()) pts.push_back(m.apply(v));
    return LatticePolytope::from_points(p.rank(), pts);
}

LatticePolytope translate(const LatticePolytope& p, const IntVec& t) {
    if (static_cast<int>(t.size()) != p.rank())
        throw Error(errc::rank_mismatch, "translation rank mismatch");
    if (p.is_empty()) return p;
    std::vector<IntVec> pts;
    for (const IntVec& v : p.vertices()) pts.push_back(vec_add(v, t));
    return LatticePolytope::from_points(p.rank(), pts);
}

std::pair<LatticePolytope, IntMat> induced_coordinates(const LatticePolytope& p) {
    if (p.is_empty()) throw Error(errc::empty_input, "empty polytope");
    const int n = p.rank();
    const int d = p.affine_dim();
    if (d == n) return {p, identity_matrix(n)};
    if (d == 0)
        throw Error(errc::invalid_argument, "a point has no induced coordinates");
    const IntVec& v0 = p.vertices().front();
    IntMat diffs;
    for (const IntVec& v : p.vertices()) diffs.push_back(vec_sub(v, v0));
    // saturated lattice of the affine hull: kernel of the kernel
    IntMat kern = integer_kernel(diffs);
    IntMat basis = integer_kernel(kern);
    RatMat bt = to_rational(mat_transpose(basis));
    std::vector<IntVec> pts;
    for (const IntVec& v : p.vertices()) {
        auto coords = solve_any(bt, to_rational(vec_sub(v, v0)));
        if (!coords || !mutkit::is_integral(*coords))
            throw Error(errc::consistency_violation, "saturation basis failed");
        pts.push_back(to_integral(*coords));
    }
    return {LatticePolytope::from_points(d, pts), basis};
}

bool are_equivalent(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.rank() != q.rank()) throw Error(errc::rank_mismatch, "equivalence needs equal rank");
    if (p.rank() > 4) throw Error(errc::unsupported_rank, "equivalence implemented for rank <= 4");
    if (p.is_empty() || q.is_empty()) return p.is_empty() == q.is_empty();
    if (p.vertex_count() != q.vertex_count()) return false;
    const int d = p.affine_dim();
    if (d != q.affine_dim()) return false;
    if (d == 0) return true;  // points are translates
    if (d < p.rank()) {
        // affine-unimodular maps of the ambient lattice restrict to lattice
        // isomorphisms of the saturated affine sublattices and conversely
        return are_equivalent(induced_coordinates(p).first, induced_coordinates(q).first);
    }
    if (normalized_volume(p) != normalized_volume(q)) return false;

    // affinely independent frame in P, greedy over the sorted vertex list
    const auto& pv = p.vertices();
    const auto& qv = q.vertices();
    std::vector<int> frame{0};
    IntMat fp;
    {
        RatMat red;
        std::vector<int> pivs;
        for (std::size_t i = 1; i < pv.size() && static_cast<int>(fp.size()) < d; ++i) {
            RatVec dd = to_rational(vec_sub(pv[i], pv[0]));
            RatVec r = dd;
            for (std::size_t k = 0; k < red.size(); ++k) {
                if (r[pivs[k]] == 0) continue;
                Rat f = r[pivs[k]] / red[k][pivs[k]];
                for (int c = 0; c < d; ++c) r[c] -= f * red[k][c];
            }
            int piv = -1;
            for (int c = 0; c < d; ++c)
                if (r[c] != 0) {
                    piv = c;
                    break;
                }
            if (piv < 0) continue;
            red.push_back(r);
            pivs.push_back(piv);
            fp.push_back(vec_sub(pv[i], pv[0]));
            frame.push_back(static_cast<int>(i));
        }
    }
    Int frame_det = abs(determinant(fp));
    auto fp_inv = inverse_rational(fp);

    std::set<IntVec> q_set(qv.begin(), qv.end());
    std::vector<int> idx(qv.size());
    for (std::size_t i = 0; i < qv.size(); ++i) idx[i] = static_cast<int>(i);

    // ordered tuples (q0, q1..qd) of distinct vertices of Q
    std::vector<int> tup(d + 1, 0);
    std::vector<bool> used(qv.size(), false);
    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == d + 1) {
            IntMat fq;
            for (int k = 1; k <= d; ++k) fq.push_back(vec_sub(qv[tup[k]], qv[tup[0]]));
            if (abs(determinant(fq)) != frame_det) return false;
            // M maps frame differences of P to those of Q:
            // M * fp^T = fq^T, so M = (fp^-1 * fq)^T
            RatMat m(d, RatVec(d, 0));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Rat acc = 0;
                    for (int k = 0; k < d; ++k) acc += (*fp_inv)[j][k] * Rat(fq[k][i]);
                    m[i][j] = acc;
                }
            if (!is_integral(m)) return false;
            IntMat mi = to_integral(m);
            Int dm = determinant(mi);
            if (dm != 1 && dm != -1) return false;
            IntVec t = vec_sub(qv[tup[0]], mat_apply(mi, pv[frame[0]]));
            for (const IntVec& v : pv) {
                if (!q_set.count(vec_add(mat_apply(mi, v), t))) return false;
            }
            return true;
        }
        for (std::size_t i = 0; i < qv.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            tup[pos] = static_cast<int>(i);
            if (rec(pos + 1)) {
                used[i] = false;
                return true;
            }
            used[i] = false;
        }
        return false;
    };
    return rec(0);
}

}  // namespace mutkit
