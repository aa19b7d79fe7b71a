#pragma once

#include <vector>

#include "qhk/levi_civita.hpp"
#include "qhk/poly.hpp"

namespace qhk {

template <class T>
using Mat = std::vector<std::vector<T>>;

template <class T>
Mat<T> mat_identity(int n, const T& one) {
    Mat<T> m(n, std::vector<T>(n, ring_zero(one)));
    for (int i = 0; i < n; ++i) m[i][i] = one;
    return m;
}

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
    const size_t n = a.size(), p = b.size(), q = p ? b[0].size() : 0;
    Mat<T> r(n, std::vector<T>(q, ring_zero(a[0][0])));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < p; ++k) {
            if (ring_is_zero(a[i][k])) continue;
            for (size_t j = 0; j < q; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
        }
    return r;
}

template <class T>
Mat<T> mat_add(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> r = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

template <class T>
Mat<T> mat_sub(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> r = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j] - b[i][j];
    return r;
}

template <class T>
Mat<T> mat_pow(Mat<T> a, long e, const T& one) {
    Mat<T> acc = mat_identity<T>(static_cast<int>(a.size()), one);
    while (e) {
        if (e & 1) acc = mat_mul(acc, a);
        a = mat_mul(a, a);
        e >>= 1;
    }
    return acc;
}

template <class T>
std::vector<T> mat_apply(const Mat<T>& a, const std::vector<T>& v) {
    std::vector<T> r(a.size(), ring_zero(v[0]));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] = r[i] + a[i][j] * v[j];
    return r;
}

// exact divisions for the coefficient domains in use
inline Rational exact_div(const Rational& a, const Rational& b) {
    if (b == 0) throw DivisionByZero();
    return a / b;
}
inline NFElem exact_div(const NFElem& a, const NFElem& b) { return nfdiv(a, b); }
inline LCNumber exact_div(const LCNumber& a, const LCNumber& b) { return lc_exact_div(a, b); }

template <class T>
Poly<T> exact_div(const Poly<T>& num, const Poly<T>& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly<T> q, r = num;
    if (r.degree() < den.degree()) {
        if (!r.is_zero()) throw LogicError("inexact polynomial division");
        return q;
    }
    q.c.assign(r.degree() - den.degree() + 1, ring_zero(den.lead()));
    while (!r.is_zero() && r.degree() >= den.degree()) {
        T f = exact_div(r.lead(), den.lead());
        int d = r.degree() - den.degree();
        q.c[d] = f;
        for (int i = 0; i <= den.degree(); ++i) r.c[i + d] = r.c[i + d] - f * den.c[i];
        r.trim();
    }
    if (!r.is_zero()) throw LogicError("inexact polynomial division");
    q.trim();
    return q;
}

// ------------------------------------------------------- fractions over a domain

/// Unreduced fraction over an integral domain; zero tests on the numerator are
/// certified by the coefficient type (truncated Levi-Civita pivots throw).
template <class T>
struct Frac {
    T num, den;

    static Frac of(const T& x, const T& one) { return {x, one}; }
    bool is_zero() const { return ring_is_zero(num); }

    Frac operator+(const Frac& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Frac operator-(const Frac& o) const { return {num * o.den - o.num * den, den * o.den}; }
    Frac operator*(const Frac& o) const { return {num * o.num, den * o.den}; }
    Frac operator/(const Frac& o) const {
        if (ring_is_zero(o.num)) throw DivisionByZero("fraction division by zero");
        return {num * o.den, den * o.num};
    }
    Frac operator-() const { return {-num, den}; }
};

template <class T>
struct Echelon {
    int rank = 0;
    std::vector<int> pivot_cols;
    Mat<Frac<T>> rref;  // reduced row echelon form
};

template <class T>
Echelon<T> frac_rref(const Mat<T>& a, const T& one) {
    Echelon<T> E;
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    Mat<Frac<T>> m(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i].push_back(Frac<T>::of(a[i][j], one));
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        Frac<T> d = m[r][c];
        for (int j = 0; j < cols; ++j) m[r][j] = m[r][j] / d;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Frac<T> f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        E.pivot_cols.push_back(c);
        ++r;
    }
    E.rank = r;
    E.rref = std::move(m);
    return E;
}

template <class T>
int mat_rank(const Mat<T>& a, const T& one) {
    if (a.empty() || a[0].empty()) return 0;
    return frac_rref(a, one).rank;
}

/// Kernel of a (rows x cols) matrix acting on column vectors; returns kernel
/// vectors as rows, denominators cleared (entries in T).
template <class T>
Mat<T> kernel_basis(const Mat<T>& a, const T& one) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    if (cols == 0) return {};
    if (rows == 0) return mat_identity<T>(cols, one);
    Echelon<T> E = frac_rref(a, one);
    std::vector<bool> is_pivot(cols, false);
    for (int c : E.pivot_cols) is_pivot[c] = true;
    Mat<T> kernel;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        // vector with x_f = 1, x_{pivot_i} = -rref[i][f]
        std::vector<Frac<T>> v(cols, Frac<T>::of(ring_zero(one), one));
        v[f] = Frac<T>::of(one, one);
        for (int i = 0; i < E.rank; ++i) v[E.pivot_cols[i]] = -E.rref[i][f];
        // clear denominators
        T mult = one;
        for (int j = 0; j < cols; ++j)
            if (!v[j].is_zero()) mult = mult * v[j].den;
        std::vector<T> out;
        out.reserve(cols);
        for (int j = 0; j < cols; ++j) {
            if (v[j].is_zero())
                out.push_back(ring_zero(one));
            else
                out.push_back(exact_div(v[j].num * mult, v[j].den));
        }
        kernel.push_back(std::move(out));
    }
    return kernel;
}

/// Fraction-free determinant (Bareiss).
template <class T>
T bareiss_det(Mat<T> a, const T& one) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return one;
    T prev = one;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (ring_is_zero(a[k][k])) {
            int sw = -1;
            for (int i = k + 1; i < n; ++i)
                if (!ring_is_zero(a[i][k])) {
                    sw = i;
                    break;
                }
            if (sw < 0) return ring_zero(one);
            std::swap(a[k], a[sw]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            a[i][k] = ring_zero(one);
        }
        prev = a[k][k];
    }
    T det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

template <class R>
R div_by_int(const R& x, long k);

template <>
inline Rational div_by_int<Rational>(const Rational& x, long k) {
    return x / Rational(k);
}
template <>
inline NFElem div_by_int<NFElem>(const NFElem& x, long k) {
    return x * Rational(Rational(1) / Rational(k));
}
template <>
inline LCNumber div_by_int<LCNumber>(const LCNumber& x, long k) {
    return x.scale_rational(Rational(1) / Rational(k));
}

/// Characteristic polynomial det(X*I - A) by the Faddeev-LeVerrier recursion;
/// exact over any commutative Q-algebra (no coefficient division beyond
/// integers). Coefficient list c[0..n], monic.
template <class R>
std::vector<R> charpoly_faddeev(const Mat<R>& a, const R& one) {
    const int n = static_cast<int>(a.size());
    std::vector<R> c(n + 1, ring_zero(one));
    c[n] = one;
    if (n == 0) return c;
    Mat<R> m = a;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // m = a * (m + c[n-k+1] * I)
            Mat<R> tmp = m;
            for (int i = 0; i < n; ++i) tmp[i][i] = tmp[i][i] + c[n - k + 1];
            m = mat_mul(a, tmp);
        }
        R tr = ring_zero(one);
        for (int i = 0; i < n; ++i) tr = tr + m[i][i];
        c[n - k] = -div_by_int(tr, k);
    }
    return c;
}

/// rank([span; v]) == rank(span): membership of v in the row span.
template <class T>
bool span_contains(Mat<T> span_rows, const std::vector<T>& v, const T& one) {
    int base = mat_rank(span_rows, one);
    span_rows.push_back(v);
    return mat_rank(span_rows, one) == base;
}

template <class T>
bool span_equal(const Mat<T>& a, const Mat<T>& b, const T& one) {
    Mat<T> stacked = a;
    for (const auto& r : b) stacked.push_back(r);
    int ra = mat_rank(a, one), rb = mat_rank(b, one), rs = mat_rank(stacked, one);
    return ra == rb && rb == rs;
}

}  // namespace qhk
