#include "qhk/levi_civita.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "qhk/errors.hpp"

namespace qhk {

RunConfig& global_config() {
    static RunConfig cfg = [] {
        RunConfig c;
        if (const char* env = std::getenv("QH_TRUNC")) {
            long v = std::atol(env);
            if (v > 0) c.trunc_order = v;
        }
        return c;
    }();
    return cfg;
}

Rational default_order() { return Rational(global_config().trunc_order); }

// ------------------------------------------------------------------ LCNumber

LCNumber LCNumber::zero(FieldPtr F) {
    LCNumber x;
    x.F_ = std::move(F);
    return x;
}

LCNumber LCNumber::one(FieldPtr F) { return from_rational(std::move(F), Rational(1)); }

LCNumber LCNumber::monomial(NFElem coeff, const Rational& exp) {
    LCNumber x;
    x.F_ = coeff.field();
    if (!coeff.is_zero()) x.t_.push_back({exp, std::move(coeff)});
    return x;
}

LCNumber LCNumber::from_rational(FieldPtr F, const Rational& r) {
    return monomial(F->from_rational(r), Rational(0));
}

LCNumber LCNumber::from_nf(const NFElem& x) { return monomial(x, Rational(0)); }

LCNumber LCNumber::truncated_zero(FieldPtr F, const Rational& order) {
    LCNumber x;
    x.F_ = std::move(F);
    x.trunc_ = order;
    return x;
}

LCNumber LCNumber::make(FieldPtr F, std::vector<LCTerm> terms, std::optional<Rational> trunc) {
    LCNumber x;
    x.F_ = std::move(F);
    x.t_ = std::move(terms);
    x.trunc_ = std::move(trunc);
    std::sort(x.t_.begin(), x.t_.end(), [](const LCTerm& a, const LCTerm& b) { return a.e < b.e; });
    x.normalize();
    return x;
}

void LCNumber::normalize() {
    std::vector<LCTerm> out;
    for (auto& t : t_) {
        if (trunc_ && t.e >= *trunc_) continue;
        if (!out.empty() && out.back().e == t.e) {
            out.back().c = out.back().c + t.c;
            if (out.back().c.is_zero()) out.pop_back();
        } else if (!t.c.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    t_ = std::move(out);
}

bool LCNumber::is_zero_certified() const {
    if (!t_.empty()) return false;
    if (!trunc_) return true;
    throw UndecidableAtTruncation("zero test hidden behind truncation O(a^" + rat_str(*trunc_) + ")");
}

ValInfo LCNumber::valuation() const {
    if (!t_.empty()) return {ValInfo::Exact, t_[0].e};
    if (trunc_) return {ValInfo::AtLeast, *trunc_};
    return {ValInfo::Infinite, Rational(0)};
}

Rational LCNumber::val_lower_bound() const {
    if (!t_.empty()) return t_[0].e;
    if (trunc_) return *trunc_;
    throw LogicError("no finite valuation bound for exact zero");
}

const Rational& LCNumber::val_exact() const {
    if (t_.empty()) throw LogicError("valuation of element without stored terms");
    return t_[0].e;
}

const NFElem& LCNumber::leading_coeff() const {
    if (t_.empty()) throw LogicError("leading coefficient of element without stored terms");
    return t_[0].c;
}

LCNumber LCNumber::operator+(const LCNumber& o) const {
    if (!F_ || !o.F_) throw LogicError("uninitialized Levi-Civita number");
    LCNumber r;
    r.F_ = F_;
    if (trunc_ && o.trunc_)
        r.trunc_ = std::min(*trunc_, *o.trunc_);
    else if (trunc_)
        r.trunc_ = trunc_;
    else if (o.trunc_)
        r.trunc_ = o.trunc_;
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j >= o.t_.size() || (i < t_.size() && t_[i].e < o.t_[j].e)) {
            r.t_.push_back(t_[i++]);
        } else if (i >= t_.size() || o.t_[j].e < t_[i].e) {
            r.t_.push_back(o.t_[j++]);
        } else {
            NFElem c = t_[i].c + o.t_[j].c;
            if (!c.is_zero()) r.t_.push_back({t_[i].e, std::move(c)});
            ++i;
            ++j;
        }
    }
    if (r.trunc_) {
        while (!r.t_.empty() && r.t_.back().e >= *r.trunc_) r.t_.pop_back();
    }
    return r;
}

LCNumber LCNumber::operator-() const {
    LCNumber r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

LCNumber LCNumber::operator-(const LCNumber& o) const { return *this + (-o); }

LCNumber LCNumber::operator*(const LCNumber& o) const {
    if (!F_ || !o.F_) throw LogicError("uninitialized Levi-Civita number");
    LCNumber r;
    r.F_ = F_;
    if (is_exact_zero() || o.is_exact_zero()) return zero(F_);
    // truncation window: min(val(x) + trunc(y), val(y) + trunc(x))
    std::optional<Rational> tr;
    if (o.trunc_) tr = val_lower_bound() + *o.trunc_;
    if (trunc_) {
        Rational cand = o.val_lower_bound() + *trunc_;
        tr = tr ? std::min(*tr, cand) : cand;
    }
    std::map<Rational, NFElem> acc;
    for (const auto& x : t_)
        for (const auto& y : o.t_) {
            Rational e = x.e + y.e;
            if (tr && e >= *tr) continue;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, x.c * y.c);
            else
                it->second = it->second + x.c * y.c;
        }
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.t_.push_back({e, c});
    r.trunc_ = tr;
    return r;
}

LCNumber LCNumber::scale(const NFElem& s) const {
    if (s.is_zero()) return zero(F_);
    LCNumber r;
    r.F_ = F_;
    r.trunc_ = trunc_;
    for (const auto& t : t_) r.t_.push_back({t.e, t.c * s});
    return r;
}

LCNumber LCNumber::scale_rational(const Rational& s) const {
    if (s == 0) return zero(F_);
    LCNumber r;
    r.F_ = F_;
    r.trunc_ = trunc_;
    for (const auto& t : t_) r.t_.push_back({t.e, t.c * s});
    return r;
}

LCNumber LCNumber::mul_monomial(const NFElem& c, const Rational& e) const {
    if (c.is_zero()) return zero(F_);
    LCNumber r;
    r.F_ = F_;
    if (trunc_) r.trunc_ = *trunc_ + e;
    for (const auto& t : t_) r.t_.push_back({t.e + e, t.c * c});
    return r;
}

LCNumber LCNumber::pow(long e, const Rational& order) const {
    if (e == 0) return one(F_);
    LCNumber base = *this;
    if (e < 0) {
        base = lc_inverse(base, order);
        e = -e;
    }
    LCNumber acc = one(F_);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

LCNumber LCNumber::pow(long e) const {
    if (e < 0 && t_.size() == 1 && !trunc_) {
        // exact monomial inverse
        LCNumber inv = monomial(t_[0].c.inverse(), -t_[0].e);
        return inv.pow(-e);
    }
    return pow(e, default_order());
}

LCNumber LCNumber::truncate_to(const Rational& order) const {
    LCNumber r;
    r.F_ = F_;
    r.trunc_ = trunc_ ? std::min(*trunc_, order) : order;
    for (const auto& t : t_)
        if (t.e < *r.trunc_) r.t_.push_back(t);
    return r;
}

bool LCNumber::operator==(const LCNumber& o) const {
    if (trunc_ != o.trunc_) return false;
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].e != o.t_[i].e || t_[i].c != o.t_[i].c) return false;
    return true;
}

int LCNumber::cmp(const LCNumber& o) const {
    // by valuation (infinite last), then term by term, then truncation
    bool za = t_.empty(), zb = o.t_.empty();
    if (za != zb) return za ? 1 : -1;
    for (size_t i = 0; i < std::min(t_.size(), o.t_.size()); ++i) {
        if (t_[i].e != o.t_[i].e) return t_[i].e < o.t_[i].e ? -1 : 1;
        int c = t_[i].c.cmp(o.t_[i].c);
        if (c) return c;
    }
    if (t_.size() != o.t_.size()) return t_.size() < o.t_.size() ? -1 : 1;
    if (trunc_ != o.trunc_) {
        if (!trunc_) return 1;
        if (!o.trunc_) return -1;
        return *trunc_ < *o.trunc_ ? -1 : 1;
    }
    return 0;
}

std::string LCNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        if (!first) os << " + ";
        bool rat = t.c.is_rational();
        std::string cs = t.c.str();
        if (t.e == 0) {
            os << (rat ? cs : "(" + cs + ")");
        } else {
            if (!(rat && t.c.rational_value() == 1)) os << (rat ? cs : "(" + cs + ")") << "*";
            os << "a";
            if (t.e != 1) {
                std::string es = rat_str(t.e);
                os << "^" << (es.find('/') == std::string::npos ? es : "(" + es + ")");
            }
        }
        first = false;
    }
    if (trunc_) {
        if (!first) os << " + ";
        os << "O(a^" << rat_str(*trunc_) << ")";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

LCNumber lc_divide(const LCNumber& a, const LCNumber& b, const Rational& order) {
    if (b.is_exact_zero()) throw DivisionByZero("Levi-Civita division by zero");
    if (!b.has_terms())
        throw UndecidableAtTruncation("divisor's leading term hidden by truncation O(a^" +
                                      rat_str(*b.trunc()) + ")");
    if (a.is_exact_zero()) return LCNumber::zero(a.field());
    const Rational vb = b.val_exact();
    const Rational stop = a.val_lower_bound() - vb + order;
    LCNumber q = LCNumber::zero(a.field());
    LCNumber r = a;
    while (r.has_terms()) {
        Rational te = r.val_exact() - vb;
        if (te >= stop) break;
        LCNumber t = LCNumber::monomial(nfdiv(r.leading_coeff(), b.leading_coeff()), te);
        q = q + t;
        r = r - t * b;
    }
    if (r.is_exact() && !r.has_terms()) return q;  // exact quotient
    return q.truncate_to(r.val_lower_bound() - vb);
}

LCNumber lc_inverse(const LCNumber& x, const Rational& order) {
    return lc_divide(LCNumber::one(x.field()), x, order);
}

ValInfo lc_abs_log2(const LCNumber& x) {
    if (x.has_terms()) return {ValInfo::Exact, x.val_exact()};
    if (!x.trunc()) return {ValInfo::Infinite, Rational(0)};
    if (*x.trunc() > 0) return {ValInfo::AtLeast, *x.trunc()};
    throw UndecidableAtTruncation("absolute value undecidable: no terms below O(a^" +
                                  rat_str(*x.trunc()) + ")");
}

LCNumber lc_exact_div(const LCNumber& a, const LCNumber& b) {
    if (!a.is_exact() || !b.is_exact())
        throw LogicError("exact division requires exact operands");
    if (b.is_exact_zero()) throw DivisionByZero();
    if (a.is_exact_zero()) return LCNumber::zero(a.field());
    LCNumber q = LCNumber::zero(a.field());
    LCNumber r = a;
    size_t guard = a.terms().size() * b.terms().size() + a.terms().size() + 8;
    while (r.has_terms()) {
        if (guard-- == 0) throw LogicError("inexact division in fraction-free elimination");
        LCNumber t =
            LCNumber::monomial(nfdiv(r.leading_coeff(), b.leading_coeff()), r.val_exact() - b.val_exact());
        q = q + t;
        r = r - t * b;
    }
    return q;
}

LCNumber lc_sum_family(FieldPtr F, const std::map<long, std::vector<LCNumber>>& groups,
                       const std::function<Rational(long)>& w, bool bidirectional, int window) {
    if (groups.empty()) return LCNumber::zero(F);

    long lo = groups.begin()->first, hi = groups.rbegin()->first;

    // verify the certified bound on every supplied member
    for (const auto& [N, xs] : groups) {
        Rational wn = w(N);
        for (const auto& x : xs) {
            if (x.is_exact_zero()) continue;
            if (x.val_lower_bound() < wn)
                throw LogicError("family member violates its certified valuation bound at group " +
                                 std::to_string(N));
        }
    }

    // probe the tail: w must keep growing beyond the covered range
    auto probe = [&](long start, long step) -> Rational {
        Rational lowest = w(start);
        for (int i = 0; i < 2 * window; ++i) {
            Rational cur = w(start + step * i);
            if (i >= window) {
                Rational prev = w(start + step * (i - window));
                if (cur <= prev)
                    throw DivergenceCertificate(
                        "tail bound fails to increase across the probe window near group " +
                        std::to_string(start + step * i));
            }
            lowest = std::min(lowest, cur);
        }
        return lowest;
    };

    Rational coverage = probe(hi + 1, +1);
    if (bidirectional) coverage = std::min(coverage, probe(lo - 1, -1));

    // gaps inside the covered range also bound the certified coverage
    for (long N = lo; N <= hi; ++N)
        if (!groups.count(N)) coverage = std::min(coverage, w(N));

    LCNumber sum = LCNumber::zero(F);
    for (const auto& [N, xs] : groups)
        for (const auto& x : xs) sum = sum + x;
    return sum.truncate_to(coverage);
}

// --------------------------------------------------------------------- SElem

SElem SElem::one(FieldPtr F) { return monomial(LCNumber::one(F), 0); }

SElem SElem::monomial(const LCNumber& coeff, int b_power) {
    SElem s(coeff.field());
    s.put(b_power, coeff);
    return s;
}

void SElem::put(int k, const LCNumber& v) {
    if (v.is_exact() && !v.has_terms()) return;
    comp_[k] = v;
}

LCNumber SElem::component(int k) const {
    auto it = comp_.find(k);
    if (it == comp_.end()) return LCNumber::zero(F_);
    return it->second;
}

bool SElem::is_exact_zero() const {
    for (const auto& [k, v] : comp_)
        if (!v.is_exact_zero()) return false;
    return true;
}

bool SElem::is_zero_certified() const {
    bool zero = true;
    for (const auto& [k, v] : comp_) zero = zero && v.is_zero_certified();
    return zero;
}

int SElem::degree() const {
    if (comp_.empty()) throw LogicError("degree of zero element of S*");
    if (comp_.size() != 1) throw DegreeMismatch("element of S* is not homogeneous");
    return comp_.begin()->first;
}

const LCNumber& SElem::lc_part() const {
    if (comp_.size() != 1) throw DegreeMismatch("element of S* is not homogeneous");
    return comp_.begin()->second;
}

SElem SElem::operator+(const SElem& o) const {
    if (!F_ || !o.F_) throw LogicError("uninitialized S* element");
    SElem r(F_);
    r.comp_ = comp_;
    for (const auto& [k, v] : o.comp_) {
        auto it = r.comp_.find(k);
        if (it == r.comp_.end())
            r.comp_[k] = v;
        else {
            it->second = it->second + v;
            if (it->second.is_exact() && !it->second.has_terms()) r.comp_.erase(it);
        }
    }
    return r;
}

SElem SElem::operator-() const {
    SElem r(F_);
    for (const auto& [k, v] : comp_) r.comp_[k] = -v;
    return r;
}

SElem SElem::operator-(const SElem& o) const { return *this + (-o); }

SElem SElem::operator*(const SElem& o) const {
    SElem r(F_);
    for (const auto& [k1, v1] : comp_)
        for (const auto& [k2, v2] : o.comp_) {
            LCNumber prod = v1 * v2;
            auto it = r.comp_.find(k1 + k2);
            if (it == r.comp_.end())
                r.comp_[k1 + k2] = prod;
            else
                it->second = it->second + prod;
        }
    for (auto it = r.comp_.begin(); it != r.comp_.end();) {
        if (it->second.is_exact() && !it->second.has_terms())
            it = r.comp_.erase(it);
        else
            ++it;
    }
    return r;
}

SElem SElem::scale(const LCNumber& s) const {
    SElem r(F_);
    for (const auto& [k, v] : comp_) {
        LCNumber prod = v * s;
        if (!(prod.is_exact() && !prod.has_terms())) r.comp_[k] = prod;
    }
    return r;
}

SElem SElem::bshift(int k) const {
    SElem r(F_);
    for (const auto& [b, v] : comp_) r.comp_[b + k] = v;
    return r;
}

SElem SElem::pow(long e) const {
    if (e == 0) return one(F_);
    if (e < 0) {
        if (comp_.size() != 1) throw LogicError("negative power of non-homogeneous S* element");
        LCNumber inv = lc_inverse(comp_.begin()->second);
        return monomial(inv, -comp_.begin()->first).pow(-e);
    }
    SElem base = *this, acc = one(F_);
    long n = e;
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool SElem::operator==(const SElem& o) const {
    auto it1 = comp_.begin();
    auto it2 = o.comp_.begin();
    while (it1 != comp_.end() && it2 != o.comp_.end()) {
        if (it1->first != it2->first) {
            // a component missing on one side must be exactly zero on the other
            return false;
        }
        if (!(it1->second == it2->second)) return false;
        ++it1;
        ++it2;
    }
    return it1 == comp_.end() && it2 == o.comp_.end();
}

int SElem::cmp(const SElem& o) const {
    auto it1 = comp_.begin();
    auto it2 = o.comp_.begin();
    while (it1 != comp_.end() && it2 != o.comp_.end()) {
        if (it1->first != it2->first) return it1->first < it2->first ? -1 : 1;
        int c = it1->second.cmp(it2->second);
        if (c) return c;
        ++it1;
        ++it2;
    }
    if (it1 != comp_.end()) return 1;
    if (it2 != o.comp_.end()) return -1;
    return 0;
}

std::string SElem::str() const {
    if (comp_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : comp_) {
        if (!first) os << " + ";
        os << "(" << v.str() << ")";
        if (k != 0) {
            os << "*b";
            if (k != 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace qhk
