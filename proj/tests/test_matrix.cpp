#include <random>

#include "doctest.h"
#include "qhk/matrix.hpp"

using namespace qhk;

namespace {
Rational R(long n) { return Rational(n); }
}

TEST_CASE("rank and kernel over the rationals") {
    Mat<Rational> a = {{R(1), R(2), R(3)}, {R(2), R(4), R(6)}, {R(1), R(0), R(1)}};
    CHECK(mat_rank(a, R(1)) == 2);
    auto ker = kernel_basis(a, R(1));
    REQUIRE(ker.size() == 1);
    // kernel vector satisfies a * v = 0
    for (const auto& row : a) {
        Rational dot(0);
        for (size_t j = 0; j < row.size(); ++j) dot += row[j] * ker[0][j];
        CHECK(dot == 0);
    }
}

TEST_CASE("bareiss determinant matches cofactor expansion") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(trial % 3);
        Mat<Rational> a(n, std::vector<Rational>(n));
        for (auto& row : a)
            for (auto& x : row) x = R(d(rng));
        // cofactor expansion
        std::function<Rational(const Mat<Rational>&)> cof = [&](const Mat<Rational>& m) -> Rational {
            if (m.size() == 1) return m[0][0];
            Rational det(0);
            int sign = 1;
            for (size_t k = 0; k < m.size(); ++k) {
                Mat<Rational> minor;
                for (size_t i = 1; i < m.size(); ++i) {
                    std::vector<Rational> row;
                    for (size_t j = 0; j < m.size(); ++j)
                        if (j != k) row.push_back(m[i][j]);
                    minor.push_back(row);
                }
                det += Rational(sign) * m[0][k] * cof(minor);
                sign = -sign;
            }
            return det;
        };
        CHECK(bareiss_det(a, R(1)) == cof(a));
    }
}

TEST_CASE("characteristic polynomial via Faddeev-LeVerrier") {
    // companion-type matrix with known char poly X^3 - 2X - 5
    Mat<Rational> a = {{R(0), R(0), R(5)}, {R(1), R(0), R(2)}, {R(0), R(1), R(0)}};
    auto c = charpoly_faddeev(a, R(1));
    REQUIRE(c.size() == 4);
    CHECK(c[3] == 1);
    CHECK(c[2] == 0);
    CHECK(c[1] == -2);
    CHECK(c[0] == -5);
}

TEST_CASE("fraction-free elimination over Levi-Civita entries") {
    auto Q = NumberField::rationals();
    auto a1 = LCNumber::monomial(Q->from_rational(1), Rational(1));
    auto one = LCNumber::one(Q);
    // [[1, a], [a, a^2]] has rank 1
    Mat<LCNumber> m = {{one, a1}, {a1, a1 * a1}};
    CHECK(mat_rank(m, one) == 1);
    auto ker = kernel_basis(m, one);
    REQUIRE(ker.size() == 1);
    // v = (-a, 1) up to scale
    LCNumber dot = m[0][0] * ker[0][0] + m[0][1] * ker[0][1];
    CHECK(dot.is_exact_zero());

    // a pivot hidden behind truncation is rejected
    Mat<LCNumber> u = {{LCNumber::truncated_zero(Q, Rational(5))}};
    CHECK_THROWS_AS(mat_rank(u, one), UndecidableAtTruncation);
}

TEST_CASE("polynomial matrices: rank over the function field") {
    // [[t, 1], [t^2, t]] has generic rank 1
    using P = Poly<Rational>;
    P t{{R(0), R(1)}}, one{{R(1)}}, t2{{R(0), R(0), R(1)}};
    Mat<P> m = {{t, one}, {t2, t}};
    CHECK(mat_rank(m, one) == 1);
    CHECK(bareiss_det(m, one).is_zero());
}
