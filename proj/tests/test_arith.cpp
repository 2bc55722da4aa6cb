#include "eqlines/matrix.hpp"
#include "eqlines/polynomial.hpp"
#include "eqlines/ratfun.hpp"

#include <doctest.h>

#include <random>

using namespace eqlines;

TEST_CASE("rational parsing and rounding") {
    CHECK(Rational::parse("-3/11") == Rational(-3, 11));
    CHECK(Rational::parse("1654.1") == Rational(16541, 10));
    CHECK(Rational::parse("-0.25") == Rational(-1, 4));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse(""));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK(Rational::from_double(0.375) == Rational(3, 8));
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("polynomial ring identities") {
    Polynomial u = Polynomial::variable("u"), v = Polynomial::variable("v"), t = Polynomial::variable("t");
    Polynomial a = u * u - v * Rational(1, 2) + t, b = u * v * t + Polynomial(3);
    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK((a * b).pow(2) == a.pow(2) * b.pow(2));
    CHECK((a - a).is_zero());
    CHECK(a.degree("u") == 2);
    CHECK((a * b).total_degree() == 5);

    Point p{{"u", Rational(1, 3)}, {"v", Rational(-2)}, {"t", Rational(5, 7)}};
    CHECK((a * b).eval(p) == a.eval(p) * b.eval(p));
    CHECK_THROWS_AS(a.eval({{"u", Rational(1)}}), MissingVariable);

    Polynomial s = a.substitute("u", v + Polynomial(1));
    Point q{{"v", Rational(-2)}, {"t", Rational(5, 7)}};
    Point q_u{{"u", Rational(-1)}, {"v", Rational(-2)}, {"t", Rational(5, 7)}};
    CHECK(s.eval(q) == a.eval(q_u));
    CHECK(a.coefficient_of("u", 2) == Polynomial(1));
}

TEST_CASE("univariate division and gcd") {
    UniPoly x = UniPoly::x();
    UniPoly f = (x - UniPoly(1)) * (x + UniPoly(2)) * (x - UniPoly(Rational(1, 3)));
    UniPoly g = (x - UniPoly(1)) * (x + UniPoly(5));
    auto [q, r] = UniPoly::divmod(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    CHECK(UniPoly::gcd(f, g) == x - UniPoly(1));
    CHECK_THROWS(UniPoly::divmod(f, UniPoly()));
}

TEST_CASE("rational functions stay canonical") {
    RationalFunction a = RationalFunction::a();
    RationalFunction f = (a * a - RationalFunction(1)) / (a - RationalFunction(1));
    CHECK(f == a + RationalFunction(1));
    CHECK(f.den().degree() == 0);
    CHECK(((a / (a + RationalFunction(2))) * (a + RationalFunction(2))) == a);
    CHECK(f.eval(Rational(4)) == Rational(5));
    CHECK_THROWS(RationalFunction(1) / RationalFunction(0));
}

TEST_CASE("exact semidefiniteness") {
    RationalMatrix m(3, 3);
    // Gram matrix of (1,0), (1,1), (0,1): PSD of rank 2.
    m(0, 0) = 1, m(0, 1) = 1, m(0, 2) = 0;
    m(1, 0) = 1, m(1, 1) = 2, m(1, 2) = 1;
    m(2, 0) = 0, m(2, 1) = 1, m(2, 2) = 1;
    CHECK(is_psd_exact(m));
    CHECK(rank(m) == 2);
    m(2, 2) = Rational(99, 100);
    CHECK_FALSE(is_psd_exact(m));

    RationalMatrix z(2, 2);  // [[0, 1], [1, 0]]: leading minors 0, -1
    z(0, 1) = z(1, 0) = 1;
    CHECK_FALSE(is_psd_exact(z));
    RationalMatrix y(2, 2);  // [[0, 0], [0, 1]]: zero pivot with zero row
    y(1, 1) = 1;
    CHECK(is_psd_exact(y));
    RationalMatrix w(2, 2);  // [[0,0],[0,-1]] has nonnegative leading minors but is not PSD
    w(1, 1) = -1;
    CHECK_FALSE(is_psd_exact(w));
}

TEST_CASE("inverse and range reduction") {
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        // M = G G^T with G 4x2: rank <= 2 symmetric PSD family.
        std::vector<RationalMatrix> fam;
        RationalMatrix g(4, 2);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 2; ++j) g(i, j) = d(gen);
        for (int f = 0; f < 3; ++f) {
            RationalMatrix h(2, 2);
            h(0, 0) = d(gen), h(1, 1) = d(gen), h(0, 1) = h(1, 0) = d(gen);
            fam.push_back(g * h * g.transpose());
        }
        RangeReduction red = reduce_to_range(fam);
        REQUIRE(red.reduced.size() == fam.size());
        CHECK(red.basis.cols() <= 2);
        for (std::size_t f = 0; f < fam.size(); ++f)
            CHECK(red.basis * red.reduced[f] * red.basis.transpose() == fam[f]);
    }
    RationalMatrix a(2, 2);
    a(0, 0) = 2, a(0, 1) = 1, a(1, 0) = 1, a(1, 1) = 1;
    CHECK(a * a.inverse() == RationalMatrix::identity(2));
    CHECK_THROWS_AS(RationalMatrix(2, 2).inverse(), std::domain_error);
}
