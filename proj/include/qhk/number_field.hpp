#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qhk/poly.hpp"

namespace qhk {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field K = Q(theta), stored as power-basis coordinates
/// (1, theta, ..., theta^{N-1}). Immutable value type.
class NFElem {
public:
    NFElem() = default;

    const FieldPtr& field() const { return F_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator-() const;
    NFElem operator*(const Rational& s) const;
    NFElem inverse() const;
    NFElem pow(long e) const;

    bool operator==(const NFElem& o) const;
    bool operator!=(const NFElem& o) const { return !(*this == o); }

    /// Deterministic total order (for canonical sorting only).
    int cmp(const NFElem& o) const;

    std::string str() const;

private:
    friend class NumberField;
    NFElem(FieldPtr F, std::vector<Rational> c) : F_(std::move(F)), c_(std::move(c)) {}

    FieldPtr F_;
    std::vector<Rational> c_;
};

inline bool ring_is_zero(const NFElem& x) { return x.is_zero(); }
inline bool ring_is_exact_zero(const NFElem& x) { return x.is_zero(); }
NFElem ring_zero(const NFElem& sample);

/// A number field presented by a monic irreducible minimal polynomial, with an
/// optional designated Q-basis (s_1, ..., s_N) used for span decompositions
/// and named generator expressions for entering composite fields.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    /// Degree-1 field Q (cached singleton).
    static FieldPtr rationals();

    /// Builds a field; verifies irreducibility of the minimal polynomial by
    /// exact factor search up to degree 24. Above that an explicit attestation
    /// is required.
    static FieldPtr create(QPoly minpoly, std::vector<std::vector<Rational>> qbasis = {},
                           std::map<std::string, std::vector<Rational>> generators = {},
                           bool attested_irreducible = false);

    int degree() const { return n_; }
    const QPoly& minpoly() const { return minpoly_; }
    bool is_rationals() const { return n_ == 1; }

    NFElem zero() const;
    NFElem one() const;
    NFElem from_rational(const Rational& r) const;
    NFElem gen() const;  // the primitive element theta
    NFElem element(std::vector<Rational> power_coeffs) const;
    NFElem generator(const std::string& name) const;
    bool has_generator(const std::string& name) const { return generators_.count(name) != 0; }

    /// True when the two presentations are interoperable (same minimal polynomial).
    bool same(const NumberField& o) const { return minpoly_.c == o.minpoly_.c; }

    /// Coordinates of x in the designated Q-basis; recomposition is exact.
    std::vector<Rational> span_decompose(const NFElem& x) const;
    NFElem span_recompose(const std::vector<Rational>& coords) const;
    const std::vector<std::vector<Rational>>& qbasis() const { return qbasis_; }
    const std::map<std::string, std::vector<Rational>>& generators() const { return generators_; }

    std::string describe() const;

private:
    NumberField() = default;

    std::vector<Rational> reduce(std::vector<Rational> v) const;  // length <= 2N-1 -> N
    friend class NFElem;
    std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
    std::vector<Rational> inv(const std::vector<Rational>& a) const;

    QPoly minpoly_;
    int n_ = 0;
    std::vector<std::vector<Rational>> qbasis_;      // rows: basis elements, power coords
    std::vector<std::vector<Rational>> qbasis_inv_;  // inverse of the transpose system
    std::vector<std::vector<Rational>> theta_pow_;   // theta^N .. theta^{2N-2} reduced
    std::map<std::string, std::vector<Rational>> generators_;
};

/// Embedding of one number field into another, given by the image of the
/// primitive element (verified to be a root of the source minimal polynomial).
struct FieldHom {
    FieldPtr from, to;
    NFElem gen_image;

    static FieldHom identity(const FieldPtr& F);
    /// Q -> K, or K -> K (identity), or a hom given by an attested generator image.
    static FieldHom make(const FieldPtr& from, const FieldPtr& to, const NFElem& gen_image);
    static FieldHom infer(const FieldPtr& from, const FieldPtr& to);  // trivial cases only

    NFElem operator()(const NFElem& x) const;
};

/// All roots in K of a nonzero polynomial with coefficients in K
/// (Trager norm + rational factorization + gcd descent). Roots are returned
/// without multiplicity, deterministically ordered.
std::vector<NFElem> field_roots(const Poly<NFElem>& h);

/// Factors a squarefree polynomial over K into irreducible factors over K.
std::vector<Poly<NFElem>> field_factor_squarefree(const Poly<NFElem>& h);

inline NFElem nfdiv(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

std::string nfpoly_str(const Poly<NFElem>& p, const std::string& var = "X");

}  // namespace qhk
