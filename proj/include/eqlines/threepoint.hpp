#pragma once

#include "eqlines/matrix.hpp"
#include "eqlines/polynomial.hpp"

#include <array>

namespace eqlines {

/// Q_k^{n-1}(u, v, t) as an honest polynomial in (u, v, t).
struct ThreePointKernel {
    int dim = 0;
    int level = 0;
    Polynomial qpoly;
};

/// Requires n >= 3 and k >= 0.
ThreePointKernel three_point_kernel(int n, int k);
Polynomial q_poly(int n, int k);
/// Q_k^{n-1} evaluated directly from the coefficients of P_k^{n-1}.
Rational q_eval(int n, int k, const Rational& u, const Rational& v, const Rational& t);

/// h_i^m = C(m+i-1, m-1) - C(m+i-3, m-1); positive for m >= 2.
Rational h_coeff(int m, int i);

/// Entry (i,j) = (n+2k)/n * P_i^{n+2k}(u) P_j^{n+2k}(v) Q_k^{n-1}(u,v,t).
/// Congruent to the true block via D = diag(sqrt(h_i^{n+2k})).
struct RationalizedBlock {
    int dim = 0;
    int level = 0;
    int d = 0;
    std::vector<std::vector<Polynomial>> entries;
};
RationalizedBlock rationalized_block(int n, int k, int d);

/// Rationalized block at one point, without building polynomials.
RationalMatrix rationalized_block_at(int n, int k, int d, const Rational& u, const Rational& v,
                                     const Rational& t);

/// Average of the rationalized block over the 6 permutations of (u, v, t).
/// Throws std::domain_error if an argument lies outside [-1, 1].
RationalMatrix s_matrix(int n, int k, int d, const Rational& u, const Rational& v, const Rational& t);

struct RelaxationVariables {
    std::array<Rational, 6> x{};

    const Rational& operator[](std::size_t i) const { return x[i]; }
    Rational& operator[](std::size_t i) { return x[i]; }
    Rational A() const { return (x[0] + x[1]) / Rational(3); }
    Rational B() const { return x[2] + x[4]; }
    Rational C() const { return x[3] + x[5]; }
    bool nonnegative() const;
};

/// The seven triples at which S is sampled: constant term first, then the
/// coefficients of x1..x6.
std::array<std::array<Rational, 3>, 7> affine_triples(const Rational& alpha, const Rational& beta);

/// S(x; alpha, beta) = F_0 + sum_i F_i x_i.
struct AffineMatrix {
    RationalMatrix constant;
    std::array<RationalMatrix, 6> coeff;

    RationalMatrix eval(const RelaxationVariables& x) const;
};
/// Requires alpha, beta in [-1, 1).
AffineMatrix s_affine_stack(int n, int k, int d, const Rational& alpha, const Rational& beta);
RationalMatrix s_affine(int n, int k, int d, const RelaxationVariables& x, const Rational& alpha,
                        const Rational& beta);

/// [[1, A], [A, A + x3+x4+x5+x6]].
RationalMatrix w_matrix(const RelaxationVariables& x);
Rational w_det(const RelaxationVariables& x);

enum class S3Variant { one_one_one, aa_one, aaa, aa_neg_a };

/// Closed forms for the k = 3 entry at the four sample triples.
/// Requires n >= 4 and -1 < alpha < 1.
Rational s3_11_closed(int n, const Rational& alpha, S3Variant variant);
/// Same formulas at a rational dimension parameter n > 3.
Rational s3_11_closed(const Rational& n, const Rational& alpha, S3Variant variant);

/// Positive factor c(n) with s3_11_closed(n, alpha, v) = c(n) * s_matrix(n, 3, d, triple)(1, 1):
/// the closed forms carry a different, positive normalization of the same entry.
Rational s3_closed_normalization(int n);

std::array<Rational, 3> variant_triple(const Rational& alpha, S3Variant variant);

}  // namespace eqlines
