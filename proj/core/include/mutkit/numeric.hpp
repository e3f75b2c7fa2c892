#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mutkit {

// Exact arithmetic throughout: unbounded integers for lattice data,
// rationals for coefficients and intermediate geometry.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int vec_gcd(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    return g;
}

inline bool is_primitive(const IntVec& v) { return vec_gcd(v) == 1; }

// floor(a/b) and ceil(a/b) for integers, b != 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }
inline Int rat_ceil(const Rat& r) { return ceil_div(r.get_num(), r.get_den()); }

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline RatVec to_rational(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

inline bool is_integral(const RatVec& v) {
    for (const Rat& x : v) {
        if (!is_integral(x)) return false;
    }
    return true;
}

inline IntVec to_integral(const RatVec& v) {
    IntVec out;
    out.reserve(v.size());
    for (const Rat& x : v) out.push_back(x.get_num());
    return out;
}

inline std::string int_str(const Int& x) { return x.get_str(); }

// "p" or "p/q", canonical (gcd(p,q)=1, q>0)
inline std::string rat_str(const Rat& x) { return x.get_str(); }

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
IntVec vec_scale(const Int& c, const IntVec& a);
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const IntVec& a, const RatVec& b);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& c, const RatVec& a);

}  // namespace mutkit
