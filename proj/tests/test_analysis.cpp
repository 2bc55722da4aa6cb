#include "eqlines/analysis.hpp"
#include "eqlines/bounds.hpp"

#include <doctest.h>

using namespace eqlines;

TEST_CASE("case bounds in both forms") {
    for (long long k = 1; k <= 40; ++k) {
        CaseBounds c = case_bounds(k);
        CHECK(c.case_a == case_a_expanded(k));
        CHECK(c.case_b == case_b_expanded(k));
        CHECK(c.case_b == Rational(c.n_b * (c.n_b + 1) / 2));
    }
    CaseBounds nine = case_bounds(9);
    // 8/3 * 219 * 10 * 11 and 359 * 360 / 2 by hand.
    CHECK(nine.case_a == 64240);
    CHECK(nine.case_b == 64620);
    CHECK(nine.n_a == 438);
    CHECK(case_bounds(2).case_b == 276);
    CHECK_THROWS_AS(case_bounds(0), std::domain_error);
}

TEST_CASE("crossover") {
    Crossover c = crossover_k();
    CHECK(c.k == 9);
    CHECK(c.n == 438);
    CHECK(case_bounds(8).case_a >= case_bounds(8).case_b);
    CHECK(case_bounds(10).case_a < case_bounds(10).case_b);
    for (long long k = 1; k < 9; ++k) CHECK(case_bounds(k).case_a >= case_bounds(k).case_b);
}

TEST_CASE("bracketing") {
    CHECK(bracket_k(23) == 2);
    CHECK(bracket_k(46) == 2);
    CHECK(bracket_k(401) == 9);
    CHECK(bracket_k(7) == 1);
    CHECK_THROWS_AS(bracket_k(6), std::domain_error);
    long long prev = bracket_k(7);
    for (long long n = 8; n <= 3000; ++n) {
        long long k = bracket_k(n);
        CHECK(k >= prev);
        if (k != prev) CHECK(n == (2 * k + 1) * (2 * k + 1) - 2);
        prev = k;
    }
}

TEST_CASE("main theorem covers each bracket for k > 1") {
    for (const auto& f : bracket_facts(2, 50)) {
        CHECK(f.covered);
        CHECK(3 * (2 * f.k + 1) * (2 * f.k + 1) - 16 > (2 * f.k + 3) * (2 * f.k + 3) - 2);
        CHECK(main_theorem_bound(2 * f.k + 1, f.lo) == f.value);
        CHECK(main_theorem_bound(2 * f.k + 1, f.hi) == f.value);
    }
    CHECK_FALSE(main_theorem_covers_bracket(1));
}
