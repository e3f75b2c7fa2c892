#include "mutkit/matrix.hpp"

#include <algorithm>
#include <cstddef>

#include "mutkit/error.hpp"

namespace mutkit {

IntVec vec_add(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVec vec_neg(const IntVec& a) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

IntVec vec_scale(const Int& c, const IntVec& a) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVec vec_scale(const Rat& c, const RatVec& a) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

IntMat identity_matrix(int n) {
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t rows = a.size(), mid = b.size(), cols = b.empty() ? 0 : b[0].size();
    IntMat out(rows, IntVec(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < mid; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

IntVec mat_apply(const IntMat& m, const IntVec& v) {
    IntVec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

IntMat mat_transpose(const IntMat& m) {
    if (m.empty()) return {};
    IntMat out(m[0].size(), IntVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) out[j][i] = m[i][j];
    return out;
}

bool mat_equal(const IntMat& a, const IntMat& b) { return a == b; }

Int determinant(const IntMat& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

RatMat to_rational(const IntMat& m) {
    RatMat out;
    out.reserve(m.size());
    for (const IntVec& row : m) out.push_back(to_rational(row));
    return out;
}

bool is_integral(const RatMat& m) {
    for (const RatVec& row : m)
        if (!is_integral(row)) return false;
    return true;
}

IntMat to_integral(const RatMat& m) {
    IntMat out;
    out.reserve(m.size());
    for (const RatVec& row : m) out.push_back(to_integral(row));
    return out;
}

std::optional<RatMat> inverse_rational(const IntMat& m) {
    const std::size_t n = m.size();
    RatMat a = to_rational(m);
    RatMat inv(n, RatVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::optional<IntMat> inverse_unimodular(const IntMat& m) {
    Int d = determinant(m);
    if (d != 1 && d != -1) return std::nullopt;
    auto inv = inverse_rational(m);
    if (!inv || !is_integral(*inv)) return std::nullopt;
    return to_integral(*inv);
}

HnfResult hermite_normal_form(const IntMat& rows) {
    HnfResult res;
    res.hnf = rows;
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows[0].size();
    res.transform = identity_matrix(static_cast<int>(m));
    IntMat& h = res.hnf;
    IntMat& u = res.transform;

    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // gcd elimination below row r in column c
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (h[i][c] == 0) continue;
                if (best == m || cmp(abs(h[i][c]), abs(h[best][c])) < 0) best = i;
            }
            if (best == m) break;  // column clear below r
            std::swap(h[r], h[best]);
            std::swap(u[r], u[best]);
            bool reduced_all = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h[i][c] == 0) continue;
                Int q = floor_div(h[i][c], h[r][c]);
                for (std::size_t j = 0; j < n; ++j) h[i][j] -= q * h[r][j];
                for (std::size_t j = 0; j < m; ++j) u[i][j] -= q * u[r][j];
                if (h[i][c] != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (h[r][c] == 0) continue;
        if (h[r][c] < 0) {
            for (std::size_t j = 0; j < n; ++j) h[r][j] = -h[r][j];
            for (std::size_t j = 0; j < m; ++j) u[r][j] = -u[r][j];
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h[i][c], h[r][c]);
            if (q == 0) continue;
            for (std::size_t j = 0; j < n; ++j) h[i][j] -= q * h[r][j];
            for (std::size_t j = 0; j < m; ++j) u[i][j] -= q * u[r][j];
        }
        ++r;
    }
    res.rank = static_cast<int>(r);
    return res;
}

IntMat integer_kernel(const IntMat& rows) {
    // Kernel of x -> rows * x equals the rows of the HNF transform of the
    // transpose that hit zero rows.
    IntMat t = mat_transpose(rows);
    if (t.empty()) return {};
    HnfResult hr = hermite_normal_form(t);
    IntMat out;
    for (std::size_t i = hr.rank; i < t.size(); ++i) out.push_back(hr.transform[i]);
    return out;
}

IntMat unimodular_completion(const IntVec& w) {
    const int n = static_cast<int>(w.size());
    if (!is_primitive(w))
        throw Error(errc::invalid_argument, "unimodular completion needs a primitive vector");
    // Column ops C with w * C = (1, 0, ..., 0); then w is the first row of
    // C^-1 and we rotate it to the bottom.
    IntMat c = identity_matrix(n);
    IntVec g = w;
    for (int i = 1; i < n; ++i) {
        if (g[i] == 0) continue;
        Int gg, p, q;
        mpz_gcdext(gg.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), g[0].get_mpz_t(),
                   g[i].get_mpz_t());
        Int a0 = g[0] / gg, ai = g[i] / gg;
        for (int r = 0; r < n; ++r) {
            Int c0 = c[r][0], ci = c[r][i];
            c[r][0] = p * c0 + q * ci;
            c[r][i] = ai * c0 - a0 * ci;
        }
        g[0] = gg;
        g[i] = 0;
    }
    if (g[0] == -1) {
        for (int r = 0; r < n; ++r) c[r][0] = -c[r][0];
        g[0] = 1;
    }
    auto cinv = inverse_unimodular(c);
    if (!cinv) throw Error(errc::invalid_argument, "completion failed");
    IntMat u;
    for (int i = 1; i < n; ++i) u.push_back((*cinv)[i]);
    u.push_back((*cinv)[0]);
    return u;
}

int rational_rank(RatMat m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    int rank = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == static_cast<std::size_t>(rank) || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::optional<RatVec> solve_square(const RatMat& a, const RatVec& b) {
    RatMat m = a;
    RatVec rhs = b;
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[c]);
        std::swap(rhs[piv], rhs[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
            rhs[i] -= f * rhs[c];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

std::optional<RatVec> solve_any(RatMat a, RatVec b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        Rat d = a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] /= d;
        b[r] /= d;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    RatVec x(cols, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

}  // namespace mutkit
