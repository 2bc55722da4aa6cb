#include "eqlines/gegenbauer.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace eqlines;

TEST_CASE("recurrence agrees with the explicit hypergeometric sum") {
    const Rational pts[] = {Rational(0), Rational(1, 3), Rational(-2, 7), Rational(9, 10), Rational(-1)};
    for (int n = 3; n <= 20; ++n)
        for (int k = 0; k <= 10; ++k)
            for (const auto& x : pts) {
                Rational want = oracle::gegenbauer_normalized(n, k, x);
                CHECK(gegenbauer_eval(n, k, x) == want);
                CHECK(gegenbauer(n, k).poly.eval({{"u", x}}) == want);
            }
}

TEST_CASE("normalization and parity") {
    for (int n = 3; n <= 20; ++n)
        for (int k = 0; k <= 10; ++k) {
            CHECK(gegenbauer_eval(n, k, Rational(1)) == 1);
            auto c = gegenbauer_coefficients(n, k);
            REQUIRE(c.size() == static_cast<std::size_t>(k) + 1);
            CHECK(c.back().sign() > 0);
            for (int j = 0; j <= k; ++j)
                if ((k - j) % 2) CHECK(c[static_cast<std::size_t>(j)].is_zero());
        }
}

TEST_CASE("dimension two gives Chebyshev polynomials") {
    auto c = gegenbauer_coefficients(2, 3);
    CHECK(c == std::vector<Rational>{0, -3, 0, 4});
    CHECK(gegenbauer_eval(2, 4, Rational(1, 2)) == Rational(-1, 2));  // cos(4 pi/3)
}

TEST_CASE("values vector and argument checks") {
    auto vals = gegenbauer_values(7, 6, Rational(1, 3));
    REQUIRE(vals.size() == 7);
    for (int k = 0; k <= 6; ++k) CHECK(vals[static_cast<std::size_t>(k)] == gegenbauer_eval(7, k, Rational(1, 3)));
    CHECK_THROWS_AS(gegenbauer(1, 2), std::domain_error);
    CHECK_THROWS_AS(gegenbauer(5, -1), std::domain_error);
    CHECK_THROWS_AS(gegenbauer_eval(1, 0, Rational(0)), std::domain_error);
}
