#include "factor_q.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "qhk/errors.hpp"

// Rational polynomial factorization: Yun squarefree decomposition, then
// Cantor-Zassenhaus mod p, Hensel lifting, and factor recombination on the
// squarefree monic integer parts.

namespace qhk {
namespace {

// ---------------------------------------------------------------- mod-p layer

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Zp {
    u64 p;
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>((u128)a * b % p); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a % p, p - 2); }
};

// dense polynomial over Z/p, no trailing zeros
using PPoly = std::vector<u64>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PPoly& a) { return static_cast<int>(a.size()) - 1; }

PPoly padd(const Zp& F, const PPoly& a, const PPoly& b) {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    ptrim(r);
    return r;
}

PPoly psub(const Zp& F, const PPoly& a, const PPoly& b) {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = F.sub(x, y);
    }
    ptrim(r);
    return r;
}

PPoly pmul(const Zp& F, const PPoly& a, const PPoly& b) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    ptrim(r);
    return r;
}

PPoly pscale(const Zp& F, const PPoly& a, u64 s) {
    PPoly r = a;
    for (auto& x : r) x = F.mul(x, s);
    ptrim(r);
    return r;
}

// division with remainder
std::pair<PPoly, PPoly> pdivmod(const Zp& F, PPoly num, const PPoly& den) {
    PPoly q;
    if (den.empty()) throw DivisionByZero("mod-p polynomial division by zero");
    u64 dl = F.inv(den.back());
    if (pdeg(num) >= pdeg(den)) q.assign(num.size() - den.size() + 1, 0);
    while (pdeg(num) >= pdeg(den)) {
        u64 f = F.mul(num.back(), dl);
        int d = pdeg(num) - pdeg(den);
        q[d] = f;
        for (size_t i = 0; i < den.size(); ++i) num[i + d] = F.sub(num[i + d], F.mul(f, den[i]));
        ptrim(num);
    }
    ptrim(q);
    return {q, num};
}

PPoly pmod(const Zp& F, const PPoly& a, const PPoly& m) { return pdivmod(F, a, m).second; }

PPoly pmonic(const Zp& F, const PPoly& a) {
    if (a.empty()) return a;
    return pscale(F, a, F.inv(a.back()));
}

PPoly pgcd(const Zp& F, PPoly a, PPoly b) {
    while (!b.empty()) {
        PPoly r = pmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(F, a);
}

PPoly pderiv(const Zp& F, const PPoly& a) {
    PPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(a[i], i % F.p));
    ptrim(r);
    return r;
}

PPoly ppowmod(const Zp& F, PPoly base, const Int& e, const PPoly& m) {
    PPoly r = {1};
    base = pmod(F, base, m);
    for (long i = static_cast<long>(boost::multiprecision::msb(e)); i >= 0; --i) {
        r = pmod(F, pmul(F, r, r), m);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r = pmod(F, pmul(F, r, base), m);
    }
    return r;
}

// deterministic PRNG for equal-degree splitting
struct Lcg {
    u64 s = 0x9e3779b97f4a7c15ull;
    u64 next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 11;
    }
};

// equal-degree factorization of a monic squarefree product of irreducibles of
// degree d (Cantor-Zassenhaus, p odd)
void edf(const Zp& F, const PPoly& f, int d, Lcg& rng, std::vector<PPoly>& out) {
    if (pdeg(f) == d) {
        out.push_back(f);
        return;
    }
    Int e = (boost::multiprecision::pow(Int(F.p), static_cast<unsigned>(d)) - 1) / 2;
    for (;;) {
        PPoly r(pdeg(f), 0);
        for (auto& x : r) x = rng.next() % F.p;
        ptrim(r);
        if (r.empty()) continue;
        PPoly g = pgcd(F, f, r);
        if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
            edf(F, g, d, rng, out);
            edf(F, pdivmod(F, f, g).first, d, rng, out);
            return;
        }
        PPoly h = ppowmod(F, r, e, f);
        if (h.empty()) continue;
        h[0] = F.sub(h[0], 1);
        ptrim(h);
        g = pgcd(F, f, h);
        if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
            edf(F, g, d, rng, out);
            edf(F, pdivmod(F, f, g).first, d, rng, out);
            return;
        }
    }
}

// full factorization of monic squarefree f mod p
std::vector<PPoly> factor_mod_p(const Zp& F, PPoly f) {
    std::vector<PPoly> out;
    Lcg rng;
    PPoly x = {0, 1};
    PPoly h = x;
    int d = 0;
    while (pdeg(f) > 0) {
        ++d;
        if (2 * d > pdeg(f)) {
            out.push_back(f);
            break;
        }
        h = ppowmod(F, h, Int(F.p), f);
        PPoly g = pgcd(F, f, psub(F, h, x));
        if (pdeg(g) > 0) {
            edf(F, g, d, rng, out);
            f = pdivmod(F, f, g).first;
            h = pmod(F, h, f);
        }
    }
    return out;
}

// --------------------------------------------------------------- integer layer

// dense integer polynomial, trailing zeros trimmed
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    ztrim(r);
    return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    ztrim(r);
    return r;
}

Int zmod_sym(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly zreduce(const ZPoly& a, const Int& m) {
    ZPoly r = a;
    for (auto& x : r) x = zmod_sym(x, m);
    ztrim(r);
    return r;
}

// division with remainder mod m by a monic divisor
std::pair<ZPoly, ZPoly> zdivmod_monic_mod(ZPoly num, const ZPoly& den, const Int& m) {
    ZPoly q;
    if (zdeg(num) >= zdeg(den)) q.assign(num.size() - den.size() + 1, Int(0));
    while (zdeg(num) >= zdeg(den)) {
        Int f = num.back();
        int d = zdeg(num) - zdeg(den);
        q[d] = f;
        for (size_t i = 0; i < den.size(); ++i) num[i + d] = zmod_sym(num[i + d] - f * den[i], m);
        ztrim(num);
    }
    ztrim(q);
    return {zreduce(q, m), zreduce(num, m)};
}

// exact division over Z; returns empty optional-equivalent (false) when not divisible
bool zdivide_exact(const ZPoly& num, const ZPoly& den, ZPoly& quot) {
    ZPoly r = num;
    quot.clear();
    if (den.empty()) return false;
    if (zdeg(r) < zdeg(den)) return r.empty();
    quot.assign(r.size() - den.size() + 1, Int(0));
    while (zdeg(r) >= zdeg(den)) {
        if (r.back() % den.back() != 0) return false;
        Int f = r.back() / den.back();
        int d = zdeg(r) - zdeg(den);
        quot[d] = f;
        for (size_t i = 0; i < den.size(); ++i) r[i + d] -= f * den[i];
        ztrim(r);
    }
    ztrim(quot);
    return r.empty();
}

struct HenselPair {
    ZPoly g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod m)
};

// one quadratic Hensel step: modulus m -> m^2
void hensel_step(const ZPoly& f, HenselPair& P, const Int& m) {
    Int m2 = m * m;
    ZPoly e = zreduce(zsub(f, zmul(P.g, P.h)), m2);
    auto [q, r] = zdivmod_monic_mod(zmul(P.s, e), P.h, m2);
    ZPoly gs = zreduce(zadd(P.g, zadd(zmul(P.t, e), zmul(q, P.g))), m2);
    ZPoly hs = zreduce(zadd(P.h, r), m2);
    ZPoly b = zreduce(zsub(zadd(zmul(P.s, gs), zmul(P.t, hs)), ZPoly{Int(1)}), m2);
    auto [c, d] = zdivmod_monic_mod(zmul(P.s, b), hs, m2);
    ZPoly ss = zreduce(zsub(P.s, d), m2);
    ZPoly ts = zreduce(zsub(P.t, zadd(zmul(P.t, b), zmul(c, gs))), m2);
    P.g = std::move(gs);
    P.h = std::move(hs);
    P.s = std::move(ss);
    P.t = std::move(ts);
}

ZPoly lift_from_p(const PPoly& a, u64 /*p*/) {
    ZPoly r;
    for (auto x : a) r.push_back(Int(x));
    ztrim(r);
    return r;
}

PPoly drop_to_p(const Zp& F, const ZPoly& a) {
    PPoly r;
    for (const auto& x : a) {
        Int v = x % Int(F.p);
        if (v < 0) v += Int(F.p);
        r.push_back(static_cast<u64>(v));
    }
    ptrim(r);
    return r;
}

// multifactor Hensel lifting of monic factors mod p to modulus >= bound
void hensel_tree(const Zp& F, const ZPoly& f, const std::vector<PPoly>& fac, u64 p, const Int& target,
                 std::vector<ZPoly>& out) {
    if (fac.size() == 1) {
        out.push_back(f);
        return;
    }
    size_t half = fac.size() / 2;
    PPoly gp = {1}, hp = {1};
    for (size_t i = 0; i < half; ++i) gp = pmul(F, gp, fac[i]);
    for (size_t i = half; i < fac.size(); ++i) hp = pmul(F, hp, fac[i]);
    // extended Euclid mod p: s*gp + t*hp = 1
    PPoly r0 = gp, r1 = hp, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r] = pdivmod(F, r0, r1);
        PPoly s2 = psub(F, s0, pmul(F, q, s1));
        PPoly t2 = psub(F, t0, pmul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (pdeg(r0) != 0) throw LogicError("hensel: modular factors not coprime");
    u64 c = F.inv(r0[0]);
    HenselPair P{lift_from_p(pmonic(F, gp), p), lift_from_p(pmonic(F, hp), p),
                 lift_from_p(pscale(F, s0, c), p), lift_from_p(pscale(F, t0, c), p)};
    Int m(p);
    while (m < target) {
        hensel_step(f, P, m);
        m *= m;
    }
    std::vector<PPoly> lf(fac.begin(), fac.begin() + half), rf(fac.begin() + half, fac.end());
    hensel_tree(F, zreduce(P.g, m), lf, p, target, out);
    hensel_tree(F, zreduce(P.h, m), rf, p, target, out);
}

// factor a monic squarefree integer polynomial (degree >= 1)
std::vector<ZPoly> factor_squarefree_monic_z(const ZPoly& g) {
    int n = zdeg(g);
    if (n <= 1) return {g};

    static const u64 primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                                 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137};

    std::vector<PPoly> best;
    Zp bestF{0};
    int tried = 0;
    for (u64 p : primes) {
        Zp F{p};
        PPoly fp = drop_to_p(F, g);
        if (pdeg(fp) != n) continue;  // leading coefficient vanished (impossible: monic)
        if (pdeg(pgcd(F, fp, pderiv(F, fp))) != 0) continue;  // not squarefree mod p
        auto fac = factor_mod_p(F, pmonic(F, fp));
        if (fac.size() == 1) return {g};  // irreducible mod p
        if (best.empty() || fac.size() < best.size()) {
            best = fac;
            bestF = F;
        }
        if (++tried >= 4) break;
    }
    if (best.empty()) throw LogicError("no usable prime for factorization");

    // Mignotte-style bound on factor coefficients, target modulus > 2*bound
    Int norm2sq(0);
    for (const auto& c : g) norm2sq += c * c;
    Int bound = (Int(1) << (n + 1)) * (boost::multiprecision::sqrt(norm2sq) + 1);
    Int target = 2 * bound + 1;

    std::vector<ZPoly> lifted;
    hensel_tree(bestF, g, best, bestF.p, target, lifted);
    Int m(bestF.p);
    while (m < target) m *= m;

    // recombination
    std::vector<ZPoly> result;
    std::vector<int> alive(lifted.size());
    std::iota(alive.begin(), alive.end(), 0);
    ZPoly rem = g;
    size_t card = 1;
    while (2 * card <= alive.size()) {
        bool found = false;
        std::vector<size_t> idx(card);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            ZPoly cand = {Int(1)};
            for (size_t i : idx) cand = zreduce(zmul(cand, lifted[alive[i]]), m);
            ZPoly quot;
            if (zdivide_exact(rem, cand, quot)) {
                result.push_back(cand);
                rem = quot;
                std::vector<int> keep;
                for (size_t i = 0, j = 0; i < alive.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    keep.push_back(alive[i]);
                }
                alive = keep;
                found = true;
                break;
            }
            // next combination
            int pos = static_cast<int>(card) - 1;
            while (pos >= 0 && idx[pos] == alive.size() - card + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t j = pos + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++card;
    }
    if (zdeg(rem) > 0) result.push_back(rem);
    return result;
}

QPoly zpoly_to_q(const ZPoly& a) {
    QPoly r;
    for (const auto& x : a) r.c.push_back(Rational(x));
    r.trim();
    return r;
}

// Yun's squarefree decomposition: f = prod a_i^i with a_i squarefree
std::vector<QPoly> yun_squarefree(const QPoly& f) {
    std::vector<QPoly> parts;  // parts[i] has multiplicity i+1
    QPoly d = poly_derivative(f);
    QPoly a = qpoly_gcd(f, d);
    QPoly b = qpoly_divmod(f, a).first;
    QPoly c = qpoly_divmod(d, a).first;
    QPoly z = poly_sub(c, poly_derivative(b));
    while (b.degree() > 0) {
        QPoly g = qpoly_gcd(b, z);
        parts.push_back(g);
        b = qpoly_divmod(b, g).first;
        z = poly_sub(qpoly_divmod(z, g).first, poly_derivative(b));
    }
    return parts;
}

}  // namespace

std::vector<QPoly> factor_rational_poly(const QPoly& f0) {
    if (f0.is_zero()) throw ZeroPolynomial("factor of zero polynomial");
    QPoly f = poly_scale(f0, Rational(1) / f0.lead());
    std::vector<QPoly> out;
    if (f.degree() < 1) return out;

    auto parts = yun_squarefree(f);
    for (size_t mi = 0; mi < parts.size(); ++mi) {
        const QPoly& part = parts[mi];
        if (part.degree() < 1) continue;
        // substitution x = y/c turns a monic rational part into a monic integer one
        Int c(1);
        for (const auto& co : part.c) c = int_lcm(c, rat_den(co));
        ZPoly g(part.c.size());
        Int cp(1);
        for (int i = part.degree(); i >= 0; --i) {
            g[i] = rat_num(part.c[i]) * cp / rat_den(part.c[i]);
            cp *= c;
        }
        ztrim(g);
        auto zfac = factor_squarefree_monic_z(g);
        for (const auto& h : zfac) {
            // map back: irreducible factor of part is h(c*x) made monic
            QPoly q;
            Rational cc(1);
            Rational lead = Rational(h.back()) * rat_pow(Rational(c), zdeg(h));
            for (int i = 0; i <= zdeg(h); ++i) {
                q.c.push_back(Rational(h[i]) * cc / lead);
                cc *= Rational(c);
            }
            q.trim();
            for (size_t rep = 0; rep <= mi; ++rep) out.push_back(q);
        }
    }
    return out;
}

bool is_irreducible_over_q(const QPoly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    auto fac = factor_rational_poly(f);
    return fac.size() == 1;
}

}  // namespace qhk
