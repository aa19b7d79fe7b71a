#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qhk/errors.hpp"
#include "qhk/rational.hpp"

namespace qhk {

inline bool ring_is_zero(const Rational& x) { return x == 0; }
inline Rational ring_zero(const Rational&) { return Rational(0); }

/// Representation-level zero test (never throws); for truncated coefficient
/// types this is "exactly zero", not "certified zero".
inline bool ring_is_exact_zero(const Rational& x) { return x == 0; }

/// Dense univariate polynomial over a commutative ring T.
/// Invariant: coefficient list carries no trailing zeros; the zero polynomial
/// is the empty list.
template <class T>
struct Poly {
    std::vector<T> c;  // c[i] is the coefficient of X^i

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && ring_is_exact_zero(c.back())) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero

    const T& lead() const {
        if (c.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
        return c.back();
    }

    T coeff_or(int i, const T& zero) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : zero;
    }
};

template <class T>
Poly<T> poly_add(const Poly<T>& a, const Poly<T>& b) {
    if (a.c.empty()) return b;
    if (b.c.empty()) return a;
    Poly<T> r;
    const auto n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i < a.c.size() && i < b.c.size())
            r.c.push_back(a.c[i] + b.c[i]);
        else if (i < a.c.size())
            r.c.push_back(a.c[i]);
        else
            r.c.push_back(b.c[i]);
    }
    r.trim();
    return r;
}

template <class T>
Poly<T> poly_neg(const Poly<T>& a) {
    Poly<T> r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

template <class T>
Poly<T> poly_sub(const Poly<T>& a, const Poly<T>& b) {
    return poly_add(a, poly_neg(b));
}

template <class T>
Poly<T> poly_mul(const Poly<T>& a, const Poly<T>& b) {
    if (a.c.empty() || b.c.empty()) return Poly<T>{};
    Poly<T> r;
    r.c.assign(a.c.size() + b.c.size() - 1, ring_zero(a.c[0]));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
}

template <class T>
Poly<T> poly_scale(const Poly<T>& a, const T& s) {
    Poly<T> r = a;
    for (auto& x : r.c) x = x * s;
    r.trim();
    return r;
}

/// Multiplication by X^k.
template <class T>
Poly<T> poly_shift(const Poly<T>& a, int k) {
    if (a.c.empty()) return a;
    Poly<T> r;
    r.c.assign(a.c.size() + k, ring_zero(a.c[0]));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = a.c[i];
    return r;
}

template <class T>
Poly<T> poly_derivative(const Poly<T>& a) {
    Poly<T> r;
    for (size_t i = 1; i < a.c.size(); ++i) r.c.push_back(a.c[i] * Rational(static_cast<long>(i)));
    r.trim();
    return r;
}

template <class T>
T poly_eval(const Poly<T>& a, const T& x) {
    T acc = ring_zero(x);
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Division with remainder; `div` performs coefficient division (exact field
/// division or an equivalent policy).
template <class T, class Div>
std::pair<Poly<T>, Poly<T>> poly_divmod(const Poly<T>& num, const Poly<T>& den, Div div) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly<T> q, r = num;
    if (r.degree() < den.degree()) return {q, r};
    q.c.assign(r.degree() - den.degree() + 1, ring_zero(den.lead()));
    while (!r.is_zero() && r.degree() >= den.degree()) {
        T f = div(r.lead(), den.lead());
        int d = r.degree() - den.degree();
        q.c[d] = f;
        // r -= f * X^d * den
        for (int i = 0; i <= den.degree(); ++i) r.c[i + d] = r.c[i + d] - f * den.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

/// Monic gcd over a coefficient field.
template <class T, class Div>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b, Div div) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b, div);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Poly<T> monic;
        T lead = a.lead();
        for (auto& x : a.c) monic.c.push_back(div(x, lead));
        monic.trim();
        return monic;
    }
    return a;
}

template <class T>
Poly<T> operator+(const Poly<T>& a, const Poly<T>& b) {
    return poly_add(a, b);
}
template <class T>
Poly<T> operator-(const Poly<T>& a, const Poly<T>& b) {
    return poly_sub(a, b);
}
template <class T>
Poly<T> operator-(const Poly<T>& a) {
    return poly_neg(a);
}
template <class T>
Poly<T> operator*(const Poly<T>& a, const Poly<T>& b) {
    return poly_mul(a, b);
}

template <class T>
bool ring_is_zero(const Poly<T>& p) {
    bool undecidable = false;
    for (const auto& c : p.c) {
        try {
            if (!ring_is_zero(c)) return false;
        } catch (const UndecidableAtTruncation&) {
            undecidable = true;
        }
    }
    if (undecidable) throw UndecidableAtTruncation("polynomial zero test hidden by truncation");
    return true;
}
template <class T>
bool ring_is_exact_zero(const Poly<T>& p) {
    for (const auto& c : p.c)
        if (!ring_is_exact_zero(c)) return false;
    return true;
}
template <class T>
Poly<T> ring_zero(const Poly<T>&) {
    return Poly<T>{};
}

using QPoly = Poly<Rational>;

inline Rational qdiv(const Rational& a, const Rational& b) {
    if (b == 0) throw DivisionByZero();
    return a / b;
}

inline std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
    return poly_divmod(a, b, qdiv);
}

inline QPoly qpoly_gcd(const QPoly& a, const QPoly& b) { return poly_gcd(a, b, qdiv); }

inline std::string qpoly_str(const QPoly& p, const std::string& var = "X") {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        if (p.c[i] == 0) continue;
        if (!s.empty()) s += (p.c[i] > 0) ? " + " : " - ";
        else if (p.c[i] < 0) s += "-";
        Rational a = rat_abs(p.c[i]);
        if (a != 1 || i == 0) s += rat_str(a);
        if (i > 0) {
            if (a != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace qhk
