#include "mutkit/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "mutkit/polytope.hpp"

namespace mutkit {

namespace {

void check_same_rank(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.rank() != g.rank())
        throw Error(errc::rank_mismatch, "polynomial ranks differ");
}

Exponent drop_axis(const Exponent& e, int axis) {
    Exponent out;
    out.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (static_cast<int>(i) != axis) out.push_back(e[i]);
    return out;
}

Exponent insert_axis(const Exponent& e, int axis, const Int& value) {
    Exponent out;
    out.reserve(e.size() + 1);
    for (std::size_t i = 0; i <= e.size(); ++i) {
        if (static_cast<int>(i) == axis) out.push_back(value);
        if (i < e.size()) out.push_back(e[i]);
    }
    return out;
}

}  // namespace

LaurentPoly LaurentPoly::constant(int rank, const Rat& c) {
    LaurentPoly p(rank);
    p.add_term(Exponent(rank, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Rat& c) {
    LaurentPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int rank, int index) {
    if (index < 0 || index >= rank)
        throw Error(errc::invalid_argument, "variable index out of range");
    Exponent e(rank, 0);
    e[index] = 1;
    return monomial(e, 1);
}

Rat LaurentPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<Exponent> LaurentPoly::support() const {
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
}

void LaurentPoly::add_term(const Exponent& e, const Rat& c) {
    if (static_cast<int>(e.size()) != rank_)
        throw Error(errc::rank_mismatch, "exponent length does not match rank");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) {
    check_same_rank(f, g);
    LaurentPoly out = f;
    for (const auto& [e, c] : g.terms()) out.add_term(e, c);
    return out;
}

LaurentPoly neg(const LaurentPoly& f) {
    LaurentPoly out(f.rank());
    for (const auto& [e, c] : f.terms()) out.add_term(e, -c);
    return out;
}

LaurentPoly sub(const LaurentPoly& f, const LaurentPoly& g) { return add(f, neg(g)); }

LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) {
    check_same_rank(f, g);
    LaurentPoly out(f.rank());
    for (const auto& [ef, cf] : f.terms())
        for (const auto& [eg, cg] : g.terms()) out.add_term(vec_add(ef, eg), cf * cg);
    return out;
}

LaurentPoly mul(const LaurentPoly& f, const Rat& c) {
    LaurentPoly out(f.rank());
    for (const auto& [e, cf] : f.terms()) out.add_term(e, cf * c);
    return out;
}

LaurentPoly pow(const LaurentPoly& f, unsigned long e) {
    LaurentPoly out = LaurentPoly::constant(f.rank(), 1);
    for (unsigned long i = 0; i < e; ++i) out = mul(out, f);
    return out;
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.rank() != g.rank())
        throw Error(errc::rank_mismatch, "polynomial ranks differ");
    if (g.is_zero()) throw Error(errc::invalid_argument, "division by zero polynomial");
    const int n = f.rank();
    if (f.is_zero()) return LaurentPoly::zero(n);

    // Any Laurent quotient q satisfies newt(q) + newt(g) = newt(f), so the
    // support of q is confined to the componentwise exponent box of f minus
    // the box of g. Long division by the lex-leading term of g then either
    // produces exactly q or leaves that box.
    Exponent lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        Int fmin, fmax, gmin, gmax;
        bool first = true;
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
    auto in_box = [&](const Exponent& e) {
        for (int i = 0; i < n; ++i)
            if (e[i] < lo[i] || e[i] > hi[i]) return false;
        return true;
    };

    const Exponent& lead_g = g.terms().rbegin()->first;
    const Rat& lead_gc = g.terms().rbegin()->second;
    LaurentPoly q(n);
    LaurentPoly r = f;
    while (!r.is_zero()) {
        const Exponent& lead_r = r.terms().rbegin()->first;
        Exponent t = vec_sub(lead_r, lead_g);
        if (!in_box(t)) return std::nullopt;
        Rat tc = r.terms().rbegin()->second / lead_gc;
        q.add_term(t, tc);
        r = sub(r, mul(g, LaurentPoly::monomial(t, tc)));
    }
    return q;
}

LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
    auto q = try_divide(f, g);
    if (!q) throw Error(errc::not_divisible, "no exact Laurent quotient");
    return *q;
}

namespace {

std::optional<Rat> rat_kth_root(const Rat& c, unsigned long k) {
    Rat a = c;
    bool negate = false;
    if (a < 0) {
        if (k % 2 == 0) return std::nullopt;
        a = -a;
        negate = true;
    }
    Int num, den;
    if (!mpz_root(num.get_mpz_t(), a.get_num().get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(den.get_mpz_t(), a.get_den().get_mpz_t(), k)) return std::nullopt;
    Rat r{num, den};
    r.canonicalize();
    return negate ? Rat(-r) : r;
}

}  // namespace

std::optional<LaurentPoly> try_kth_root(const LaurentPoly& f, unsigned long k) {
    if (k == 0) throw Error(errc::invalid_argument, "zeroth root");
    if (k == 1) return f;
    if (f.is_zero()) return f;
    const int n = f.rank();

    // leading term of the root: lex-max exponent of f is k times that of g
    const Exponent& lead = f.terms().rbegin()->first;
    Exponent b(n);
    for (int i = 0; i < n; ++i) {
        if (lead[i] % Int(k) != 0) return std::nullopt;
        b[i] = lead[i] / Int(k);
    }
    auto d = rat_kth_root(f.terms().rbegin()->second, k);
    if (!d) return std::nullopt;

    // support bound: every root exponent lies in the scaled exponent box
    Exponent lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        Int fmin, fmax;
        bool first = true;
        for (const auto& [e, c] : f.terms()) {
            if (first || e[i] < fmin) fmin = e[i];
            if (first || e[i] > fmax) fmax = e[i];
            first = false;
        }
        lo[i] = ceil_div(fmin, Int(k));
        hi[i] = floor_div(fmax, Int(k));
        if (lo[i] > hi[i]) return std::nullopt;
    }

    LaurentPoly g = LaurentPoly::monomial(b, *d);
    Rat dpow = 1;
    for (unsigned long i = 0; i + 1 < k; ++i) dpow *= *d;
    Rat lead_factor = Rat(static_cast<long>(k)) * dpow;
    Exponent lead_shift = vec_scale(Int(static_cast<long>(k) - 1), b);
    LaurentPoly r = sub(f, pow(g, k));
    while (!r.is_zero()) {
        // the lex-max residue term comes from k * lt(g)^{k-1} * u
        const Exponent& t = r.terms().rbegin()->first;
        Exponent u = vec_sub(t, lead_shift);
        bool in_box = true;
        for (int i = 0; i < n; ++i) in_box = in_box && lo[i] <= u[i] && u[i] <= hi[i];
        if (!in_box || !(u < g.terms().rbegin()->first) ) return std::nullopt;
        Rat cu = r.terms().rbegin()->second / lead_factor;
        g.add_term(u, cu);
        r = sub(f, pow(g, k));
    }
    return g;
}

UnimodularMap::UnimodularMap(IntMat m) : matrix_(std::move(m)) {
    if (matrix_.empty()) throw Error(errc::invalid_argument, "empty matrix");
    for (const auto& row : matrix_)
        if (row.size() != matrix_.size())
            throw Error(errc::invalid_argument, "matrix must be square");
    Int d = determinant(matrix_);
    if (d != 1 && d != -1)
        throw Error(errc::invalid_argument, "matrix determinant must be +-1");
}

UnimodularMap UnimodularMap::inverse() const {
    auto inv = inverse_unimodular(matrix_);
    return UnimodularMap(*inv);
}

UnimodularMap UnimodularMap::compose(const UnimodularMap& inner) const {
    return UnimodularMap(mat_mul(matrix_, inner.matrix_));
}

LaurentPoly apply_unimodular(const LaurentPoly& f, const UnimodularMap& m) {
    if (m.rank() != f.rank())
        throw Error(errc::rank_mismatch, "map rank does not match polynomial rank");
    LaurentPoly out(f.rank());
    for (const auto& [e, c] : f.terms()) out.add_term(m.apply(e), c);
    return out;
}

std::map<Int, LaurentPoly> split_by_axis(const LaurentPoly& f, int axis) {
    if (axis < 0 || axis >= f.rank())
        throw Error(errc::rank_mismatch, "axis index out of range");
    std::map<Int, LaurentPoly> slices;
    for (const auto& [e, c] : f.terms()) {
        auto [it, inserted] = slices.emplace(e[axis], LaurentPoly(f.rank() - 1));
        it->second.add_term(drop_axis(e, axis), c);
    }
    return slices;
}

LaurentPoly join_axis(int rank, int axis, const std::map<Int, LaurentPoly>& slices) {
    LaurentPoly out(rank);
    for (const auto& [h, slice] : slices)
        for (const auto& [e, c] : slice.terms()) out.add_term(insert_axis(e, axis, h), c);
    return out;
}

LaurentPoly substitute_axis(const LaurentPoly& f, int axis, const LaurentPoly& g) {
    if (axis < 0 || axis >= f.rank())
        throw Error(errc::rank_mismatch, "axis index out of range");
    if (g.rank() != f.rank() - 1)
        throw Error(errc::rank_mismatch, "factor must live in the non-axis variables");
    if (g.is_zero()) throw Error(errc::invalid_argument, "factor must be nonzero");

    std::map<Int, LaurentPoly> out_slices;
    for (auto& [h, c_h] : split_by_axis(f, axis)) {
        if (h >= 0) {
            out_slices.emplace(h, mul(pow(g, h.get_ui()), c_h));
        } else {
            Int k = -h;
            auto q = try_divide(c_h, pow(g, k.get_ui()));
            if (!q) {
                std::ostringstream msg;
                msg << "substitution is not Laurent: factor^" << k.get_str()
                    << " does not divide the height " << h.get_str() << " slice";
                throw NotLaurentError(h, c_h, msg.str());
            }
            out_slices.emplace(h, *q);
        }
    }
    return join_axis(f.rank(), axis, out_slices);
}

LiftResult augmentation_lift(const LaurentPoly& w, const Exponent& v) {
    if (static_cast<int>(v.size()) != w.rank())
        throw Error(errc::rank_mismatch, "base exponent length does not match rank");
    if (w.coeff(v) == 0)
        throw Error(errc::not_an_exponent, "base monomial is not in the support");
    const int n = w.rank();

    // f = x^{-v} W; its support spans the sublattice we rebase onto.
    IntMat shifted;
    for (const auto& [e, c] : w.terms()) shifted.push_back(vec_sub(e, v));
    HnfResult hnf = hermite_normal_form(shifted);

    const bool full_rank = (hnf.rank == n);
    IntMat basis(hnf.hnf.begin(), hnf.hnf.begin() + hnf.rank);
    Int index = full_rank ? Int(abs(determinant(basis))) : Int(0);

    // Express each shifted exponent in basis coordinates; integral by
    // construction of the Hermite basis. A monomial input spans nothing and
    // lifts to a constant.
    LaurentPoly lifted(std::max(hnf.rank, 1));
    if (hnf.rank == 0) {
        lifted.add_term(Exponent(1, 0), w.coeff(v));
    } else {
        RatMat bt = to_rational(mat_transpose(basis));
        for (const auto& [e, c] : w.terms()) {
            auto coords = solve_any(bt, to_rational(vec_sub(e, v)));
            if (!coords || !is_integral(*coords))
                throw Error(errc::consistency_violation, "support exponent escaped its own span");
            lifted.add_term(to_integral(*coords), c);
        }
    }
    LiftResult res{std::move(lifted), std::move(basis), index, full_rank, v};

    if (push_forward(res.lifted, res.basis, v) != w)
        throw Error(errc::consistency_violation, "lift does not push forward to the input");
    return res;
}

LaurentPoly push_forward(const LaurentPoly& lifted, const IntMat& basis, const Exponent& v) {
    const int n = static_cast<int>(v.size());
    LaurentPoly out(n);
    for (const auto& [e, c] : lifted.terms()) {
        Exponent img = v;
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (int i = 0; i < n; ++i) img[i] += e[k] * basis[k][i];
        out.add_term(img, c);
    }
    return out;
}

LatticePolytope newton(const LaurentPoly& f) {
    if (f.is_zero())
        throw Error(errc::empty_polynomial, "the zero polynomial has no Newton polytope");
    std::vector<IntVec> pts = f.support();
    return hull(f.rank(), pts);
}

std::string pretty(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    static const char* short_names[] = {"x", "y", "z", "w"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool all_zero = std::all_of(e.begin(), e.end(), [](const Int& x) { return x == 0; });
        bool wrote = false;
        if (a != 1 || all_zero) {
            os << rat_str(a);
            wrote = true;
        }
        for (int i = 0; i < f.rank(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            if (f.rank() <= 4)
                os << short_names[i];
            else
                os << "x" << (i + 1);
            if (e[i] != 1) os << "^" << e[i].get_str();
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace mutkit
