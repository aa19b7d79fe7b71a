#include "qhk/number_field.hpp"

#include <algorithm>
#include <sstream>

#include "factor_q.hpp"
#include "qhk/errors.hpp"

namespace qhk {

namespace {

void check_same_field(const NFElem& a, const NFElem& b) {
    if (!a.field() || !b.field()) throw LogicError("uninitialized number field element");
    if (a.field().get() != b.field().get() && !a.field()->same(*b.field()))
        throw FieldMismatch();
}

// solve the linear system M x = e_i for all i (matrix inverse over Q), rows of m are equations
std::vector<std::vector<Rational>> invert_rational_matrix(std::vector<std::vector<Rational>> m) {
    const size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw LogicError("singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

// ------------------------------------------------------------------- NFElem

bool NFElem::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool NFElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational NFElem::rational_value() const {
    if (!is_rational()) throw LogicError("element is not rational: " + str());
    return c_.empty() ? Rational(0) : c_[0];
}

NFElem NFElem::operator+(const NFElem& o) const {
    check_same_field(*this, o);
    std::vector<Rational> r = c_;
    for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return NFElem(F_, std::move(r));
}

NFElem NFElem::operator-(const NFElem& o) const {
    check_same_field(*this, o);
    std::vector<Rational> r = c_;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
    return NFElem(F_, std::move(r));
}

NFElem NFElem::operator-() const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x = -x;
    return NFElem(F_, std::move(r));
}

NFElem NFElem::operator*(const NFElem& o) const {
    check_same_field(*this, o);
    return NFElem(F_, F_->mul(c_, o.c_));
}

NFElem NFElem::operator*(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= s;
    return NFElem(F_, std::move(r));
}

NFElem NFElem::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    return NFElem(F_, F_->inv(c_));
}

NFElem NFElem::pow(long e) const {
    if (e == 0) return F_->one();
    NFElem base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    NFElem acc = F_->one();
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool NFElem::operator==(const NFElem& o) const {
    check_same_field(*this, o);
    return c_ == o.c_;
}

int NFElem::cmp(const NFElem& o) const {
    check_same_field(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] < o.c_[i]) return -1;
        if (c_[i] > o.c_[i]) return 1;
    }
    return 0;
}

std::string NFElem::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        Rational a = rat_abs(c_[i]);
        if (i == 0 || a != 1) os << rat_str(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << "g";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

NFElem ring_zero(const NFElem& sample) { return sample.field()->zero(); }

// --------------------------------------------------------------- NumberField

FieldPtr NumberField::rationals() {
    static FieldPtr q = [] {
        QPoly mp;
        mp.c = {Rational(0), Rational(1)};  // X (theta = 0); degree-1 field
        return create(mp);
    }();
    return q;
}

FieldPtr NumberField::create(QPoly minpoly, std::vector<std::vector<Rational>> qbasis,
                             std::map<std::string, std::vector<Rational>> generators,
                             bool attested_irreducible) {
    if (minpoly.degree() < 1) throw LogicError("minimal polynomial must have degree >= 1");
    if (minpoly.lead() != 1) throw LogicError("minimal polynomial must be monic");
    int n = minpoly.degree();
    if (n > 24 && !attested_irreducible)
        throw LogicError("irreducibility above degree 24 requires an attestation flag");
    if (n <= 24 && n > 1 && !is_irreducible_over_q(minpoly))
        throw LogicError("minimal polynomial is reducible over Q: " + qpoly_str(minpoly));

    auto F = std::shared_ptr<NumberField>(new NumberField());
    F->minpoly_ = minpoly;
    F->n_ = n;

    // reductions of theta^k for k = N..2N-2
    // theta^N = -(c_0 + c_1 theta + ... + c_{N-1} theta^{N-1})
    std::vector<Rational> tn(n);
    for (int i = 0; i < n; ++i) tn[i] = -minpoly.c[i];
    F->theta_pow_.push_back(tn);
    for (int k = 1; k < n - 1; ++k) {
        std::vector<Rational> prev = F->theta_pow_.back();
        std::vector<Rational> next(n, Rational(0));
        // multiply prev by theta
        for (int i = 0; i < n - 1; ++i) next[i + 1] = prev[i];
        if (prev[n - 1] != 0)
            for (int i = 0; i < n; ++i) next[i] += prev[n - 1] * tn[i];
        F->theta_pow_.push_back(next);
    }

    if (qbasis.empty()) {
        qbasis.resize(n, std::vector<Rational>(n, Rational(0)));
        for (int i = 0; i < n; ++i) qbasis[i][i] = 1;
    }
    if (static_cast<int>(qbasis.size()) != n)
        throw LogicError("qbasis must contain degree-many elements");
    for (auto& row : qbasis) row.resize(n, Rational(0));
    F->qbasis_ = qbasis;
    // decomposition solves x = sum_k coords_k * s_k: columns are the s_k
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m[i][k] = qbasis[k][i];
    F->qbasis_inv_ = invert_rational_matrix(m);  // throws on a non-basis

    for (auto& [name, expr] : generators) {
        expr.resize(n, Rational(0));
        F->generators_[name] = expr;
    }
    return F;
}

NFElem NumberField::zero() const {
    return NFElem(shared_from_this(), std::vector<Rational>(n_, Rational(0)));
}

NFElem NumberField::one() const { return from_rational(Rational(1)); }

NFElem NumberField::from_rational(const Rational& r) const {
    std::vector<Rational> c(n_, Rational(0));
    c[0] = r;
    return NFElem(shared_from_this(), std::move(c));
}

NFElem NumberField::gen() const {
    std::vector<Rational> c(n_, Rational(0));
    if (n_ > 1) c[1] = 1;
    // for the degree-1 field the primitive element is the root of the minimal polynomial
    else c[0] = -minpoly_.c[0];
    return NFElem(shared_from_this(), std::move(c));
}

NFElem NumberField::element(std::vector<Rational> power_coeffs) const {
    if (static_cast<int>(power_coeffs.size()) > n_) {
        power_coeffs = reduce(std::move(power_coeffs));
    }
    power_coeffs.resize(n_, Rational(0));
    return NFElem(shared_from_this(), std::move(power_coeffs));
}

NFElem NumberField::generator(const std::string& name) const {
    auto it = generators_.find(name);
    if (it == generators_.end()) throw LogicError("unknown field generator '" + name + "'");
    return NFElem(shared_from_this(), it->second);
}

std::vector<Rational> NumberField::reduce(std::vector<Rational> v) const {
    while (v.size() > static_cast<size_t>(n_) && v.back() == 0) v.pop_back();
    if (static_cast<int>(v.size()) <= n_) {
        v.resize(n_, Rational(0));
        return v;
    }
    std::vector<Rational> r(n_, Rational(0));
    for (int i = 0; i < n_ && i < static_cast<int>(v.size()); ++i) r[i] = v[i];
    for (size_t k = n_; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        const auto& red = theta_pow_[k - n_];
        for (int i = 0; i < n_; ++i) r[i] += v[k] * red[i];
    }
    return r;
}

std::vector<Rational> NumberField::mul(const std::vector<Rational>& a,
                                       const std::vector<Rational>& b) const {
    std::vector<Rational> prod(2 * n_ - 1, Rational(0));
    for (int i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    return reduce(std::move(prod));
}

std::vector<Rational> NumberField::inv(const std::vector<Rational>& a) const {
    // extended Euclid in Q[X]: s*a + t*minpoly = 1
    QPoly r0 = minpoly_, r1;
    r1.c = a;
    r1.trim();
    QPoly s0, s1;
    s1.c = {Rational(1)};
    while (!r1.is_zero()) {
        auto [q, r] = qpoly_divmod(r0, r1);
        QPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0)
        throw LogicError("element is a zero divisor; minimal polynomial not irreducible?");
    QPoly s = poly_scale(s0, Rational(1) / r0.c[0]);
    std::vector<Rational> c = s.c;
    return reduce(std::move(c));
}

std::vector<Rational> NumberField::span_decompose(const NFElem& x) const {
    if (x.field().get() != this && !x.field()->same(*this)) throw FieldMismatch();
    std::vector<Rational> out(n_, Rational(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i] += qbasis_inv_[i][j] * x.coeffs()[j];
    return out;
}

NFElem NumberField::span_recompose(const std::vector<Rational>& coords) const {
    if (static_cast<int>(coords.size()) != n_) throw LogicError("span coordinate length mismatch");
    std::vector<Rational> c(n_, Rational(0));
    for (int k = 0; k < n_; ++k)
        for (int i = 0; i < n_; ++i) c[i] += coords[k] * qbasis_[k][i];
    return NFElem(shared_from_this(), std::move(c));
}

std::string NumberField::describe() const {
    if (is_rationals()) return "Q";
    return "Q[g]/(" + qpoly_str(minpoly_, "g") + ")";
}

// ------------------------------------------------------------------ FieldHom

FieldHom FieldHom::identity(const FieldPtr& F) { return FieldHom{F, F, F->gen()}; }

FieldHom FieldHom::make(const FieldPtr& from, const FieldPtr& to, const NFElem& gen_image) {
    if (gen_image.field().get() != to.get() && !gen_image.field()->same(*to))
        throw FieldMismatch("generator image must lie in the target field");
    // verify the image satisfies the source minimal polynomial
    NFElem val = to->zero();
    const QPoly& mp = from->minpoly();
    for (int i = mp.degree(); i >= 0; --i) val = val * gen_image + to->from_rational(mp.c[i]);
    if (!val.is_zero())
        throw LogicError("attested embedding is invalid: image does not satisfy the minimal polynomial");
    return FieldHom{from, to, gen_image};
}

FieldHom FieldHom::infer(const FieldPtr& from, const FieldPtr& to) {
    if (from->is_rationals()) return FieldHom{from, to, to->zero()};
    if (from->same(*to)) return FieldHom{from, to, to->gen()};
    throw FieldMismatch("no inferable embedding " + from->describe() + " -> " + to->describe() +
                        "; supply a generator image");
}

NFElem FieldHom::operator()(const NFElem& x) const {
    if (from->is_rationals()) return to->from_rational(x.coeffs()[0]);
    NFElem acc = to->zero();
    for (int i = from->degree() - 1; i >= 0; --i)
        acc = acc * gen_image + to->from_rational(x.coeffs()[i]);
    return acc;
}

// --------------------------------------------------------------- field roots

namespace {

Poly<NFElem> nfpoly_monic(const Poly<NFElem>& p) {
    if (p.is_zero()) return p;
    NFElem inv = p.lead().inverse();
    Poly<NFElem> r;
    for (const auto& c : p.c) r.c.push_back(c * inv);
    r.trim();
    return r;
}

Poly<NFElem> nfpoly_gcd(const Poly<NFElem>& a, const Poly<NFElem>& b) {
    return poly_gcd(a, b, nfdiv);
}

// exact division in Q[X]; throws when not divisible
QPoly qpoly_exact_div(const QPoly& a, const QPoly& b) {
    auto [q, r] = qpoly_divmod(a, b);
    if (!r.is_zero()) throw LogicError("inexact polynomial division");
    return q;
}

// resultant over Q of two polynomials in an auxiliary variable whose
// coefficients are rational polynomials in X (fraction-free Gaussian elimination
// on the Sylvester matrix)
QPoly sylvester_resultant(const std::vector<QPoly>& f, const std::vector<QPoly>& g) {
    int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
    int size = m + n;
    if (size == 0) return QPoly{{Rational(1)}};
    std::vector<std::vector<QPoly>> a(size, std::vector<QPoly>(size));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) a[i][i + j] = f[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) a[n + i][i + j] = g[n - j];

    // Bareiss
    QPoly prev{{Rational(1)}};
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (a[k][k].is_zero()) {
            int sw = -1;
            for (int i = k + 1; i < size; ++i)
                if (!a[i][k].is_zero()) {
                    sw = i;
                    break;
                }
            if (sw < 0) return QPoly{};  // zero resultant
            std::swap(a[k], a[sw]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                QPoly num = poly_sub(poly_mul(a[i][j], a[k][k]), poly_mul(a[i][k], a[k][j]));
                a[i][j] = qpoly_exact_div(num, prev);
            }
            a[i][k] = QPoly{};
        }
        prev = a[k][k];
    }
    QPoly det = a[size - 1][size - 1];
    if (sign < 0) det = poly_neg(det);
    return det;
}

}  // namespace

std::vector<Poly<NFElem>> field_factor_squarefree(const Poly<NFElem>& h0) {
    if (h0.is_zero()) throw ZeroPolynomial("factor of zero polynomial");
    FieldPtr K = h0.c[0].field();
    Poly<NFElem> h = nfpoly_monic(h0);
    if (h.degree() <= 1) return {h};

    if (K->is_rationals()) {
        QPoly q;
        for (const auto& c : h.c) q.c.push_back(c.rational_value());
        q.trim();
        auto fac = factor_rational_poly(q);
        std::vector<Poly<NFElem>> out;
        for (const auto& f : fac) {
            Poly<NFElem> p;
            for (const auto& c : f.c) p.c.push_back(K->from_rational(c));
            p.trim();
            out.push_back(p);
        }
        return out;
    }

    const int N = K->degree();
    for (long shift = 0;; shift = (shift <= 0 ? -shift + 1 : -shift)) {
        // norm(X) = Res_Y(minpoly(Y), h_shift(X, Y)) where theta -> Y and X -> X - s*Y
        // coefficients of h(X - sY) as polynomials in Y with Q[X] coefficients
        int dh = h.degree();
        // bivariate array b[yi][xi]
        std::vector<QPoly> ycoeffs(static_cast<size_t>(N - 1 + dh * (shift != 0 ? 1 : 0)) + 1);
        // compute h(X - sY) = sum_i c_i(Y) * (X - sY)^i
        // (X - sY)^i expanded: sum_k binom(i,k) X^{i-k} (-sY)^k
        std::vector<std::vector<Rational>> binom(dh + 1, std::vector<Rational>(dh + 1, Rational(0)));
        for (int i = 0; i <= dh; ++i) {
            binom[i][0] = 1;
            for (int k = 1; k <= i; ++k)
                binom[i][k] = binom[i - 1][k - 1] + (k <= i - 1 ? binom[i - 1][k] : Rational(0));
        }
        for (int i = 0; i <= dh; ++i) {
            const auto& ci = h.c[i].coeffs();  // polynomial in theta -> Y
            for (int yd = 0; yd < N; ++yd) {
                if (ci[yd] == 0) continue;
                for (int k = 0; k <= i; ++k) {
                    Rational coef = ci[yd] * binom[i][k] * rat_pow(Rational(-shift), k);
                    if (coef == 0) continue;
                    size_t ypow = static_cast<size_t>(yd + k);
                    if (ycoeffs.size() <= ypow) ycoeffs.resize(ypow + 1);
                    QPoly& tgt = ycoeffs[ypow];
                    if (tgt.c.size() <= static_cast<size_t>(i - k)) tgt.c.resize(i - k + 1, Rational(0));
                    tgt.c[i - k] += coef;
                }
            }
        }
        while (!ycoeffs.empty() && ycoeffs.back().is_zero()) ycoeffs.pop_back();
        for (auto& p : ycoeffs) p.trim();

        std::vector<QPoly> mp;
        for (const auto& c : K->minpoly().c) mp.push_back(QPoly{{c}});
        QPoly norm = sylvester_resultant(mp, ycoeffs);
        if (norm.is_zero()) continue;
        // require squarefree norm for the gcd descent
        if (qpoly_gcd(norm, poly_derivative(norm)).degree() != 0) continue;

        auto qfac = factor_rational_poly(norm);
        std::vector<Poly<NFElem>> out;
        NFElem stheta = K->gen() * Rational(shift);
        for (const auto& gq : qfac) {
            // g(X + s*theta) over K
            Poly<NFElem> g;
            g.c = {K->from_rational(gq.c[gq.degree()])};
            for (int i = gq.degree() - 1; i >= 0; --i) {
                // g := g*(X + s*theta) + c_i
                Poly<NFElem> shifted = poly_shift(g, 1);
                Poly<NFElem> scaled = poly_scale(g, stheta);
                g = poly_add(shifted, scaled);
                if (g.c.empty())
                    g.c = {K->from_rational(gq.c[i])};
                else
                    g.c[0] = g.c[0] + K->from_rational(gq.c[i]);
                g.trim();
            }
            Poly<NFElem> factor = nfpoly_gcd(h, g);
            if (factor.degree() >= 1) out.push_back(nfpoly_monic(factor));
        }
        // sanity: degrees must add up to deg h
        int total = 0;
        for (const auto& f : out) total += f.degree();
        if (total != h.degree()) throw LogicError("field factorization degree mismatch");
        return out;
    }
}

std::vector<NFElem> field_roots(const Poly<NFElem>& h0) {
    if (h0.is_zero()) throw ZeroPolynomial("roots of zero polynomial");
    if (h0.degree() < 1) return {};
    Poly<NFElem> h = nfpoly_monic(h0);
    Poly<NFElem> g = nfpoly_gcd(h, poly_derivative(h));
    if (g.degree() >= 1) h = poly_divmod(h, g, nfdiv).first;

    std::vector<NFElem> roots;
    for (const auto& f : field_factor_squarefree(h)) {
        if (f.degree() == 1) roots.push_back(-f.c[0]);
    }
    std::sort(roots.begin(), roots.end(), [](const NFElem& a, const NFElem& b) { return a.cmp(b) < 0; });
    return roots;
}

std::string nfpoly_str(const Poly<NFElem>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        if (p.c[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + p.c[i].str() + ")";
        if (i > 0) {
            s += "*" + var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace qhk
