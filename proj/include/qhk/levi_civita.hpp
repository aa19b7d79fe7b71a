#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qhk/config.hpp"
#include "qhk/number_field.hpp"

namespace qhk {

/// Valuation of a Levi-Civita number: exact, a lower bound (hidden behind a
/// truncation window), or infinite (the zero element). |x| = 2^{-val}.
struct ValInfo {
    enum Kind { Exact, AtLeast, Infinite } kind;
    Rational v;  // meaningless for Infinite

    bool certainly_greater(const Rational& w) const {
        return kind == Infinite || v > w || (kind == AtLeast && v >= w);
    }
};

struct LCTerm {
    Rational e;  // exponent of a
    NFElem c;    // nonzero coefficient in K
};

/// Element of the rational Levi-Civita field over K: finitely many stored
/// terms with strictly increasing rational exponents, plus an optional
/// truncation order O (terms with exponent >= O are unknown).
class LCNumber {
public:
    LCNumber() = default;

    static LCNumber zero(FieldPtr F);
    static LCNumber one(FieldPtr F);
    static LCNumber monomial(NFElem coeff, const Rational& exp);
    static LCNumber from_rational(FieldPtr F, const Rational& r);
    static LCNumber from_nf(const NFElem& x);
    static LCNumber truncated_zero(FieldPtr F, const Rational& order);
    static LCNumber make(FieldPtr F, std::vector<LCTerm> terms, std::optional<Rational> trunc);

    const FieldPtr& field() const { return F_; }
    const std::vector<LCTerm>& terms() const { return t_; }
    const std::optional<Rational>& trunc() const { return trunc_; }

    bool is_exact() const { return !trunc_.has_value(); }
    bool is_exact_zero() const { return t_.empty() && !trunc_; }
    bool has_terms() const { return !t_.empty(); }

    /// Exact zero test; throws UndecidableAtTruncation for a termless
    /// truncated element.
    bool is_zero_certified() const;

    ValInfo valuation() const;
    /// Lower bound on the valuation (infinite for the exact zero, encoded by
    /// the caller checking is_exact_zero()).
    Rational val_lower_bound() const;
    /// Leading exponent; requires a stored term.
    const Rational& val_exact() const;
    const NFElem& leading_coeff() const;

    LCNumber operator+(const LCNumber& o) const;
    LCNumber operator-(const LCNumber& o) const;
    LCNumber operator*(const LCNumber& o) const;
    LCNumber operator-() const;
    LCNumber scale(const NFElem& s) const;
    LCNumber scale_rational(const Rational& s) const;
    LCNumber mul_monomial(const NFElem& c, const Rational& e) const;
    LCNumber pow(long e, const Rational& order) const;
    LCNumber pow(long e) const;  // nonnegative or monomial base; exact path

    /// Truncates to order O (drops terms with exponent >= O, records O).
    LCNumber truncate_to(const Rational& order) const;

    /// Representation equality (terms and truncation window).
    bool operator==(const LCNumber& o) const;
    bool operator!=(const LCNumber& o) const { return !(*this == o); }
    int cmp(const LCNumber& o) const;  // deterministic total order

    std::string str() const;

private:
    FieldPtr F_;
    std::vector<LCTerm> t_;
    std::optional<Rational> trunc_;

    void normalize();
};

/// Division with certified residual: returns q with val(a - q*b) >= val(a) + order.
/// Exact when the division terminates (e.g. monomial divisor).
LCNumber lc_divide(const LCNumber& a, const LCNumber& b, const Rational& order);
LCNumber lc_inverse(const LCNumber& x, const Rational& order);
inline LCNumber lc_inverse(const LCNumber& x) { return lc_inverse(x, default_order()); }

/// The non-archimedean absolute value in log2 space: |x| = 2^{-val}.
/// Exact zero reports Infinite (|x| = 0); a termless truncated element with
/// positive window reports AtLeast; otherwise UndecidableAtTruncation.
ValInfo lc_abs_log2(const LCNumber& x);

inline bool ring_is_zero(const LCNumber& x) { return x.is_zero_certified(); }
inline bool ring_is_exact_zero(const LCNumber& x) { return x.is_exact_zero(); }
inline LCNumber ring_zero(const LCNumber& sample) { return LCNumber::zero(sample.field()); }
inline LCNumber operator*(const LCNumber& a, const Rational& s) { return a.scale_rational(s); }

/// Exact division in the group ring K[a^Q]; both operands exact, result exact
/// (LogicError otherwise). Used by fraction-free elimination.
LCNumber lc_exact_div(const LCNumber& a, const LCNumber& b);

/// Sums a family grouped by integer weight, guarded by a certified tail bound
/// w(N) -> infinity; rejects certificates that fail to grow across a probe
/// window. Result is truncated at the certified coverage.
LCNumber lc_sum_family(FieldPtr F, const std::map<long, std::vector<LCNumber>>& groups,
                       const std::function<Rational(long)>& tail_valuation,
                       bool bidirectional = false, int window = 32);

/// Element of S* = F[b^{+-1}]: finitely many b-components with Levi-Civita
/// coefficients. |b| = 1, deg b = 1.
class SElem {
public:
    SElem() = default;
    explicit SElem(FieldPtr F) : F_(std::move(F)) {}

    static SElem zero(FieldPtr F) { return SElem(F); }
    static SElem one(FieldPtr F);
    static SElem monomial(const LCNumber& coeff, int b_power);

    const FieldPtr& field() const { return F_; }
    const std::map<int, LCNumber>& components() const { return comp_; }
    LCNumber component(int k) const;

    bool is_exact_zero() const;
    bool is_zero_certified() const;

    /// Homogeneous elements have exactly one nonzero component.
    bool is_homogeneous() const { return comp_.size() <= 1; }
    int degree() const;               // requires homogeneous nonzero
    const LCNumber& lc_part() const;  // coefficient of the single component

    SElem operator+(const SElem& o) const;
    SElem operator-(const SElem& o) const;
    SElem operator*(const SElem& o) const;
    SElem operator-() const;
    SElem scale(const LCNumber& s) const;
    SElem bshift(int k) const;  // multiply by b^k
    SElem pow(long e) const;    // e >= 0, or homogeneous invertible base

    bool operator==(const SElem& o) const;
    bool operator!=(const SElem& o) const { return !(*this == o); }
    int cmp(const SElem& o) const;

    std::string str() const;

private:
    FieldPtr F_;
    std::map<int, LCNumber> comp_;

    void put(int k, const LCNumber& v);
};

inline bool ring_is_zero(const SElem& x) { return x.is_zero_certified(); }
inline bool ring_is_exact_zero(const SElem& x) { return x.is_exact_zero(); }
inline SElem ring_zero(const SElem& sample) { return SElem::zero(sample.field()); }

}  // namespace qhk
