#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mutkit/error.hpp"
#include "mutkit/matrix.hpp"
#include "mutkit/numeric.hpp"

namespace mutkit {

class LatticePolytope;

// Exponent vector of a Laurent monomial; length equals the ambient rank.
using Exponent = IntVec;

// Laurent polynomial over Z^n with exact rational coefficients. Terms are
// kept in a lexicographically ordered map; zero coefficients are never
// stored, so equality and serialization are canonical.
class LaurentPoly {
public:
    explicit LaurentPoly(int rank) : rank_(rank) {
        if (rank < 1) throw Error(errc::invalid_argument, "rank must be positive");
    }

    static LaurentPoly zero(int rank) { return LaurentPoly(rank); }
    static LaurentPoly constant(int rank, const Rat& c);
    static LaurentPoly monomial(const Exponent& e, const Rat& c);
    // The i-th coordinate variable as a polynomial.
    static LaurentPoly variable(int rank, int index);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, Rat>& terms() const { return terms_; }

    Rat coeff(const Exponent& e) const;
    std::vector<Exponent> support() const;

    // Adds c * x^e, dropping the term if the sum cancels.
    void add_term(const Exponent& e, const Rat& c);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

private:
    int rank_;
    std::map<Exponent, Rat> terms_;
};

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly sub(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly neg(const LaurentPoly& f);
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul(const LaurentPoly& f, const Rat& c);
LaurentPoly pow(const LaurentPoly& f, unsigned long e);

inline LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) { return add(f, g); }
inline LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) { return sub(f, g); }
inline LaurentPoly operator-(const LaurentPoly& f) { return neg(f); }
inline LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) { return mul(f, g); }

// Exact quotient in the Laurent ring; throws NotDivisible when none exists.
LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g);
std::optional<LaurentPoly> try_divide(const LaurentPoly& f, const LaurentPoly& g);

// Exact k-th root in the Laurent ring, when one exists.
std::optional<LaurentPoly> try_kth_root(const LaurentPoly& f, unsigned long k);

// GL(n,Z) change of variables acting on exponents.
class UnimodularMap {
public:
    explicit UnimodularMap(IntMat m);
    static UnimodularMap identity(int n) { return UnimodularMap(identity_matrix(n)); }

    int rank() const { return static_cast<int>(matrix_.size()); }
    const IntMat& matrix() const { return matrix_; }
    Exponent apply(const Exponent& e) const { return mat_apply(matrix_, e); }
    UnimodularMap inverse() const;
    UnimodularMap compose(const UnimodularMap& inner) const;  // this ∘ inner

private:
    IntMat matrix_;
};

LaurentPoly apply_unimodular(const LaurentPoly& f, const UnimodularMap& m);

// Writes f = sum_h z^h C_h where z is the chosen axis variable; each C_h has
// rank n-1 in the remaining variables (original order preserved).
std::map<Int, LaurentPoly> split_by_axis(const LaurentPoly& f, int axis);

// Inverse of split_by_axis.
LaurentPoly join_axis(int rank, int axis, const std::map<Int, LaurentPoly>& slices);

// The substitution z -> z * g on the chosen axis. Negative powers of g are
// resolved by exact division of the corresponding slices: if g^{-h} does not
// divide C_h for some h < 0 the substitution is not Laurent and NotLaurent is
// raised, reporting the offending height.
LaurentPoly substitute_axis(const LaurentPoly& f, int axis, const LaurentPoly& g);

class NotLaurentError : public Error {
public:
    NotLaurentError(const Int& height, LaurentPoly slice, const std::string& what)
        : Error(errc::not_laurent, what), height_(height), slice_(std::move(slice)) {}
    const Int& height() const { return height_; }
    const LaurentPoly& slice() const { return slice_; }

private:
    Int height_;
    LaurentPoly slice_;
};

// Rebases x^{-v} * W onto a basis of the sublattice spanned by its support.
// `basis` rows express the chosen basis in the original exponent lattice;
// `index` is the sublattice index when the span is full rank, else 0 with
// full_rank = false. The base exponent v is kept for provenance.
struct LiftResult {
    LaurentPoly lifted;
    IntMat basis;
    Int index;
    bool full_rank = true;
    Exponent base_exponent;
};

LiftResult augmentation_lift(const LaurentPoly& w, const Exponent& v);

// Pushes a lifted polynomial forward along basis rows and multiplies by x^v;
// recovers the augmentation_lift input by construction.
LaurentPoly push_forward(const LaurentPoly& lifted, const IntMat& basis, const Exponent& v);

// Convex hull of the support. Declared here, implemented with the lattice
// machinery.
LatticePolytope newton(const LaurentPoly& f);

// Human-readable form, e.g. "2*x*y^-2 + 1". Uses x,y,z(,w) for rank <= 4.
std::string pretty(const LaurentPoly& f);

}  // namespace mutkit
