#include "eqlines/sdp_problem.hpp"
#include "eqlines/threepoint.hpp"
#include "eqlines/twodist.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace eqlines;

namespace {

// Q from its definition at u = 3/5, v = 4/5, where sqrt((1-u^2)(1-v^2)) = 12/25.
Rational q_by_definition(int n, int k, const Rational& t) {
    const Rational u(3, 5), v(4, 5), root(12, 25);
    return root.pow(k) * oracle::gegenbauer_normalized(n - 1, k, (t - u * v) / root);
}

}  // namespace

TEST_CASE("kernel matches its definition at a rational point") {
    const Rational ts[] = {Rational(0), Rational(1, 2), Rational(-1, 3), Rational(24, 25)};
    for (int n = 4; n <= 12; ++n)
        for (int k = 0; k <= 6; ++k)
            for (const auto& t : ts) {
                Rational want = q_by_definition(n, k, t);
                CHECK(q_eval(n, k, Rational(3, 5), Rational(4, 5), t) == want);
                CHECK(q_poly(n, k).eval({{"u", Rational(3, 5)}, {"v", Rational(4, 5)}, {"t", t}}) == want);
            }
}

TEST_CASE("level two kernel in dimension seven") {
    Polynomial u = Polynomial::variable("u"), v = Polynomial::variable("v"), t = Polynomial::variable("t");
    Polynomial want = u * u * v * v + u * u * Rational(1, 5) - u * v * t * Rational(12, 5) + v * v * Rational(1, 5) +
                      t * t * Rational(6, 5) - Polynomial(Rational(1, 5));
    CHECK(q_poly(7, 2) == want);
    CHECK_THROWS_AS(q_poly(2, 1), std::domain_error);
}

TEST_CASE("harmonic space dimensions") {
    for (int m = 3; m <= 15; ++m)
        for (int i = 0; i <= 6; ++i) {
            // dim Harm_i(R^m) = C(m+i-1, i) - C(m+i-3, i-2)
            Rational want(mpz_class(binomial(m + i - 1, i) - binomial(m + i - 3, i - 2)));
            CHECK(h_coeff(m, i) == want);
        }
    CHECK(h_coeff(5, 1) == 5);
}

TEST_CASE("symmetrized block is symmetric in its arguments") {
    const Rational a(1, 3), b(-1, 5), c(2, 7);
    RationalMatrix s = s_matrix(6, 2, 3, a, b, c);
    CHECK(s.is_symmetric());
    CHECK(s == s_matrix(6, 2, 3, c, a, b));
    CHECK(s == s_matrix(6, 2, 3, b, c, a));
    // Rationalized block at one point against its polynomial form.
    RationalizedBlock blk = rationalized_block(6, 2, 3);
    RationalMatrix at = rationalized_block_at(6, 2, 3, a, b, c);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(blk.entries[i][j].eval({{"u", a}, {"v", b}, {"t", c}}) == at(i, j));
    CHECK_THROWS_AS(s_matrix(6, 2, 3, Rational(3, 2), a, a), std::domain_error);
    CHECK_THROWS_AS(s_affine_stack(6, 1, 2, Rational(1), a), std::domain_error);
}

TEST_CASE("closed-form entries agree with the construction up to a positive factor") {
    const Rational alphas[] = {Rational(1, 3), Rational(1, 5), Rational(-1, 7), Rational(2, 5)};
    const S3Variant variants[] = {S3Variant::one_one_one, S3Variant::aa_one, S3Variant::aaa, S3Variant::aa_neg_a};
    for (int n = 5; n <= 16; ++n) {
        Rational c = s3_closed_normalization(n);
        CHECK(c.sign() > 0);
        for (const auto& a : alphas)
            for (auto var : variants) {
                auto tr = variant_triple(a, var);
                Rational entry = s_matrix(n, 3, 1, tr[0], tr[1], tr[2])(1, 1);
                CHECK(s3_11_closed(n, a, var) == c * entry);
            }
    }
    CHECK_THROWS_AS(s3_11_closed(3, Rational(1, 5), S3Variant::aaa), std::domain_error);
}

TEST_CASE("level three grouping identities") {
    for (int n : {5, 9, 16})
        for (const Rational& a : {Rational(1, 3), Rational(1, 5), Rational(2, 5)}) {
            CHECK(s_matrix(n, 3, 3, a, a, a)(1, 1) == s_matrix(n, 3, 3, a, -a, -a)(1, 1));
            CHECK(s_matrix(n, 3, 3, a, a, -a)(1, 1) == s_matrix(n, 3, 3, -a, -a, -a)(1, 1));
        }
}

TEST_CASE("W matrix and its determinant") {
    RelaxationVariables x{{Rational(3), Rational(6), Rational(1), Rational(2), Rational(1, 2), Rational(0)}};
    CHECK(x.A() == 3);
    CHECK(x.B() == Rational(3, 2));
    CHECK(x.C() == 2);
    RationalMatrix w = w_matrix(x);
    CHECK(w(0, 0) * w(1, 1) - w(0, 1) * w(1, 0) == w_det(x));
    CHECK(w_det(x) == x.B() + x.C() - x.A() * (x.A() - Rational(1)));
}

TEST_CASE("a real configuration satisfies every constraint exactly") {
    // 28 unit vectors in R^7 with products +-1/3: the simplex pairs of dimension 7.
    auto gram = simplex_pairs_gram(7);
    auto x = triple_distribution(gram, Rational(1, 3));
    FeasibilityReport rep = check_feasible_exact(SdpParams{7, Rational(1, 3), 8, 5, 3}, x);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
    CHECK(rep.objective == 28);
    RelaxationVariables rv{x};
    CHECK(w_det(rv) == 0);  // equality in W
}
