#include <random>

#include "doctest.h"
#include "qhk/levi_civita.hpp"

using namespace qhk;

namespace {

FieldPtr Q() { return NumberField::rationals(); }

LCNumber mono(long c, const Rational& e) {
    return LCNumber::monomial(Q()->from_rational(Rational(c)), e);
}

LCNumber random_lc(std::mt19937_64& rng, bool allow_zero = true) {
    std::uniform_int_distribution<int> nterms(allow_zero ? 0 : 1, 4);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    std::vector<LCTerm> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        long c = num(rng);
        if (c == 0) c = 1;
        terms.push_back({Rational(num(rng), den(rng)), Q()->from_rational(Rational(c))});
    }
    return LCNumber::make(Q(), std::move(terms), std::nullopt);
}

}  // namespace

TEST_CASE("absolute value in log2 space") {
    // |a^3| = 2^{-3}
    auto v = lc_abs_log2(mono(1, 3));
    CHECK(v.kind == ValInfo::Exact);
    CHECK(v.v == 3);

    // exact zero has absolute value 0
    CHECK(lc_abs_log2(LCNumber::zero(Q())).kind == ValInfo::Infinite);

    // |5 + a| = 2^0 = 1: the absolute value restricted to Q is trivial
    auto w = lc_abs_log2(mono(5, 0) + mono(1, 1));
    CHECK(w.kind == ValInfo::Exact);
    CHECK(w.v == 0);

    // termless truncated element with positive window: lower bound only
    auto t = lc_abs_log2(LCNumber::truncated_zero(Q(), Rational(2)));
    CHECK(t.kind == ValInfo::AtLeast);
    CHECK(t.v == 2);

    CHECK_THROWS_AS(lc_abs_log2(LCNumber::truncated_zero(Q(), Rational(0))),
                    UndecidableAtTruncation);
    CHECK_THROWS_AS(LCNumber::truncated_zero(Q(), Rational(1)).is_zero_certified(),
                    UndecidableAtTruncation);
}

TEST_CASE("arithmetic basics") {
    LCNumber one = LCNumber::one(Q()), a = mono(1, 1);
    // (1 + a)(1 - a) = 1 - a^2
    CHECK((one + a) * (one - a) == one - mono(1, 2));
    // a^{1/2} * a^{1/3} = a^{5/6}
    CHECK(mono(1, Rational(1, 2)) * mono(1, Rational(1, 3)) == mono(1, Rational(5, 6)));
}

TEST_CASE("inverse of 1 - a at order 3") {
    LCNumber x = LCNumber::one(Q()) - mono(1, 1);
    LCNumber inv = lc_inverse(x, Rational(3));
    // 1 + a + a^2 with truncation window 3
    LCNumber expect = (LCNumber::one(Q()) + mono(1, 1) + mono(1, 2)).truncate_to(Rational(3));
    CHECK(inv == expect);
    // residual valuation >= 3
    LCNumber residual = x * inv - LCNumber::one(Q());
    CHECK(!residual.has_terms());
    CHECK(residual.trunc().has_value());
    CHECK(*residual.trunc() >= 3);
}

TEST_CASE("division is exact when it terminates") {
    LCNumber num = mono(1, 2) - mono(1, 4);   // a^2 - a^4
    LCNumber den = LCNumber::one(Q()) + mono(1, 1);
    LCNumber q = lc_divide(num, den, Rational(50));
    CHECK(q.is_exact());
    CHECK(q == mono(1, 2) - mono(1, 3));
    CHECK_THROWS_AS(lc_divide(num, LCNumber::zero(Q()), Rational(10)), DivisionByZero);
    CHECK_THROWS_AS(lc_divide(num, LCNumber::truncated_zero(Q(), Rational(5)), Rational(10)),
                    UndecidableAtTruncation);
}

TEST_CASE("ultrametric inequality on random pairs") {
    std::mt19937_64 rng(3);
    int checked = 0;
    while (checked < 500) {
        LCNumber x = random_lc(rng), y = random_lc(rng);
        if (x.is_exact_zero() || y.is_exact_zero() || (x + y).is_exact_zero()) continue;
        Rational vx = x.val_exact(), vy = y.val_exact(), vs = (x + y).val_exact();
        CHECK(vs >= std::min(vx, vy));
        if (vx != vy) CHECK(vs == std::min(vx, vy));
        ++checked;
    }
}

TEST_CASE("valuations add under multiplication") {
    std::mt19937_64 rng(4);
    int checked = 0;
    while (checked < 200) {
        LCNumber x = random_lc(rng, false), y = random_lc(rng, false);
        if (!x.has_terms() || !y.has_terms()) continue;  // terms can cancel on merge
        CHECK((x * y).val_exact() == x.val_exact() + y.val_exact());
        ++checked;
    }
}

TEST_CASE("inverse round-trip at truncation order") {
    std::mt19937_64 rng(5);
    Rational T(24);
    int checked = 0;
    while (checked < 50) {
        LCNumber x = random_lc(rng, false);
        LCNumber r = x * lc_inverse(x, T) - LCNumber::one(Q());
        CHECK(!r.has_terms());
        if (r.trunc()) CHECK(*r.trunc() >= T + x.val_exact() - x.val_exact());
        ++checked;
    }
}

TEST_CASE("family summation with a growing tail bound") {
    // x_n = a^n with w_N = N reproduces the geometric series expansion
    std::map<long, std::vector<LCNumber>> groups;
    const long T = 12;
    for (long n = 0; n < T; ++n) groups[n] = {mono(1, n)};
    LCNumber sum = lc_sum_family(Q(), groups, [](long n) { return Rational(n); });
    LCNumber geo = lc_inverse(LCNumber::one(Q()) - mono(1, 1), Rational(T));
    CHECK(sum == geo);
}

TEST_CASE("family summation rejects a flat tail bound") {
    // x_n = 2^{-n}: constant valuation 0, the bound cannot tend to infinity
    std::map<long, std::vector<LCNumber>> groups;
    for (long n = 0; n < 8; ++n)
        groups[n] = {LCNumber::from_rational(Q(), rat_pow(Rational(1, 2), n))};
    CHECK_THROWS_AS(
        lc_sum_family(Q(), groups, [](long) { return Rational(0); }),
        DivergenceCertificate);
}

TEST_CASE("empty family sums to zero") {
    std::map<long, std::vector<LCNumber>> groups;
    LCNumber sum = lc_sum_family(Q(), groups, [](long n) { return Rational(n); });
    CHECK(sum.is_exact_zero());
}

TEST_CASE("S* elements") {
    auto F = Q();
    SElem x = SElem::monomial(mono(1, 3), 6);  // a^3 b^6
    CHECK(x.degree() == 6);
    SElem y = SElem::monomial(LCNumber::one(F), -2);
    SElem p = x * y;
    CHECK(p.degree() == 4);
    CHECK(p.component(4) == mono(1, 3));
    CHECK((x - x).is_exact_zero());
    CHECK(x.pow(2).degree() == 12);

    SElem m = x + y;
    CHECK(!m.is_homogeneous());
    CHECK_THROWS_AS(m.degree(), DegreeMismatch);
}
