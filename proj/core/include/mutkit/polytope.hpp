#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mutkit/error.hpp"
#include "mutkit/matrix.hpp"
#include "mutkit/numeric.hpp"

namespace mutkit {

class UnimodularMap;

// Primitive integer vector in the dual lattice.
class WidthVector {
public:
    explicit WidthVector(IntVec w);
    const IntVec& vec() const { return w_; }
    int rank() const { return static_cast<int>(w_.size()); }
    WidthVector negated() const;
    Int operator()(const IntVec& p) const { return dot(w_, p); }
    Rat operator()(const RatVec& p) const { return dot(w_, p); }
    friend bool operator==(const WidthVector& a, const WidthVector& b) { return a.w_ == b.w_; }

private:
    IntVec w_;
};

// Lattice polytope stored as its irredundant, lexicographically sorted
// vertex list. The empty polytope (no vertices) is allowed as a degenerate
// value; hull() never produces it.
class LatticePolytope {
public:
    LatticePolytope() : rank_(0) {}  // empty rank-0 sentinel
    static LatticePolytope empty(int rank) { return LatticePolytope(rank); }
    // Canonicalizes: convex hull, irredundant, sorted.
    static LatticePolytope from_points(int rank, std::vector<IntVec> points);

    int rank() const { return rank_; }
    bool is_empty() const { return vertices_.empty(); }
    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<IntVec>& vertices() const { return vertices_; }
    int affine_dim() const;

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
        return a.rank_ == b.rank_ && a.vertices_ == b.vertices_;
    }
    friend bool operator<(const LatticePolytope& a, const LatticePolytope& b) {
        return a.vertices_ < b.vertices_;
    }

private:
    explicit LatticePolytope(int rank) : rank_(rank) {}
    friend class RationalPolytope;
    int rank_;
    std::vector<IntVec> vertices_;
};

// Same as LatticePolytope but with exact rational vertices (height slices).
class RationalPolytope {
public:
    static RationalPolytope empty(int rank) { return RationalPolytope(rank); }
    static RationalPolytope from_points(int rank, std::vector<RatVec> points);
    static RationalPolytope from_lattice(const LatticePolytope& p);

    int rank() const { return rank_; }
    bool is_empty() const { return vertices_.empty(); }
    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<RatVec>& vertices() const { return vertices_; }
    int affine_dim() const;
    bool is_integral() const;
    LatticePolytope to_lattice() const;  // requires integral vertices

    friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
        return a.rank_ == b.rank_ && a.vertices_ == b.vertices_;
    }

private:
    explicit RationalPolytope(int rank) : rank_(rank) {}
    int rank_;
    std::vector<RatVec> vertices_;
};

LatticePolytope hull(int rank, const std::vector<IntVec>& points);
RationalPolytope hull_rational(int rank, const std::vector<RatVec>& points);

struct WidthHeights {
    Int h_min;
    Int h_max;
    Int width;
};
WidthHeights width_heights(const LatticePolytope& p, const WidthVector& w);

// Exact intersection P ∩ { <w,.> = h }, from vertices on the hyperplane and
// edge crossings. h must lie in [h_min, h_max].
RationalPolytope slice(const LatticePolytope& p, const WidthVector& w, const Int& h);

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);
RationalPolytope minkowski_sum(const RationalPolytope& a, const RationalPolytope& b);

LatticePolytope dilate(const LatticePolytope& p, const Int& m);

struct FanoReport {
    bool fano = false;
    bool origin_interior = false;
    bool vertices_primitive = false;
    std::string detail;
};
FanoReport is_fano(const LatticePolytope& p);

// Multiset (sorted) of lattice lengths of all edges; rank 2 or 3 only.
std::vector<Int> affine_edge_lengths(const LatticePolytope& p);

struct Fingerprint {
    int rank = 0;
    std::size_t vertex_count = 0;
    std::vector<std::size_t> f_vector;  // faces of dim 0 .. rank-1
    Int normalized_volume;
    std::vector<Int> edge_lengths;  // sorted multiset
    Int points_p;
    Int points_2p;
    Int interior_points;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
// Exact affine invariants; requires a full-dimensional polytope of rank <= 4.
Fingerprint fingerprint(const LatticePolytope& p, const Int& enumeration_cap = Int(10000000));

// Affine-unimodular equivalence: exists M in GL(n,Z), t in Z^n with
// M.vert(P) + t = vert(Q) as sets.
bool are_equivalent(const LatticePolytope& p, const LatticePolytope& q);

// Exact membership tests.
bool contains(const LatticePolytope& p, const RatVec& point);
bool contains(const RationalPolytope& p, const RatVec& point);

// Prepared membership tester: affine-hull equations plus facet inequalities,
// built once, then O(#facets) per query.
class PreparedHull {
public:
    explicit PreparedHull(const RationalPolytope& p);
    explicit PreparedHull(const LatticePolytope& p);
    bool contains(const RatVec& point) const;
    bool contains_interior(const RatVec& point) const;  // strict on facets
    bool empty() const { return empty_; }

private:
    void build(const std::vector<RatVec>& verts, int rank);
    bool empty_ = true;
    std::vector<RatVec> equations_;     // e·x = e_rhs (last entry)
    std::vector<RatVec> inequalities_;  // a·x <= a_rhs (last entry)
    std::vector<RatVec> verts_;         // fallback for 0/1-dim corner cases
};

// All lattice points of the polytope; throws TooLarge past the cap.
std::vector<IntVec> lattice_points(const RationalPolytope& p, const Int& cap = Int(10000000));
std::vector<IntVec> lattice_points(const LatticePolytope& p, const Int& cap = Int(10000000));

// Edges as vertex pairs (each pair sorted, list sorted).
std::vector<std::array<IntVec, 2>> edge_list(const LatticePolytope& p);

// n! times Euclidean volume; requires full-dimensional input.
Int normalized_volume(const LatticePolytope& p);

LatticePolytope apply_unimodular(const LatticePolytope& p, const UnimodularMap& m);
LatticePolytope translate(const LatticePolytope& p, const IntVec& t);

// Rewrites a (possibly lower-dimensional) polytope in coordinates of the
// saturated lattice of its affine hull: the result is full-dimensional of
// rank affine_dim. Returns the polytope together with the basis rows used.
std::pair<LatticePolytope, IntMat> induced_coordinates(const LatticePolytope& p);

}  // namespace mutkit
