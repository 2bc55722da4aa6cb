#pragma once

#include "eqlines/rational.hpp"

#include <array>
#include <map>
#include <vector>

namespace eqlines {

using RealVector = std::vector<double>;

/// Unit vectors whose pairwise inner products take the two values a, b.
/// `gram` keeps the exact products when the set comes from a rational construction.
struct TwoDistanceSet {
    int dim = 0;
    std::vector<RealVector> points;
    Rational a;
    Rational b;
    std::vector<std::vector<Rational>> gram;
};

/// Scale and angle of the lift, kept exactly: R^2 = (2-a-b)/2, cos = (a-b)/(2-a-b).
struct LiftParameters {
    Rational r2;
    Rational cos_theta;
};

struct LiftResult {
    double r = 0;
    Rational r2;
    Rational cos_theta;
    int dim = 0;
    std::vector<RealVector> lifted;
};

/// e_i + e_j (i < j) in R^{n+1}, centred, normalized and written in a
/// Gram-Schmidt frame of the hyperplane sum x = 0. The products are
/// a = (n-3)/(2(n-1)) and b = -2/(n-1). Requires n >= 3.
TwoDistanceSet simplex_pairs_construction(int n);

/// Exact unit-normalized Gram matrix of the construction.
std::vector<std::vector<Rational>> simplex_pairs_gram(int n);

/// Throws std::domain_error unless a + b < 0 and a != b lie in [-1, 1).
LiftParameters lift_parameters(const Rational& a, const Rational& b);
LiftResult lift(const TwoDistanceSet& s);

/// Largest deviation of the vector norms from 1 and of the pairwise products
/// from the nearest admissible value.
struct CheckReport {
    double norm_error = 0;
    double product_error = 0;
    std::vector<double> distinct_products;  // clustered at `tol`
};
CheckReport check_points(const std::vector<RealVector>& pts, const std::vector<double>& admissible, double tol = 1e-12);

/// Distance distribution of a set of unit vectors with products in {alpha, -alpha},
/// in the variables of the three-point relaxation: x1, x2 count ordered pairs at
/// alpha, -alpha (times 3/N); x3..x6 count ordered triples of distinct vectors whose
/// product multiset is {a,a,a}, {a,a,-a}, {a,-a,-a}, {-a,-a,-a} (divided by N).
std::array<Rational, 6> triple_distribution(const std::vector<std::vector<Rational>>& gram, const Rational& alpha);

/// n(n+3)/2. Requires n >= 2.
long long harmonic_bound(long long n);

/// max(M(n+1), n(n+1)/2): the first branch covers a + b < 0 through the lift,
/// the second covers a + b >= 0 (Musin).
long long g_upper(long long n, long long m_upper_n_plus_1);

struct GRow {
    long long n = 0;
    long long g_upper = 0;
    long long lower = 0;  // n(n+1)/2 from the construction
    bool tight = false;
};

/// One row per n in [lo, hi]. `m_bounds` maps dimension to an upper bound on M;
/// a missing M(n+1) throws std::out_of_range naming n.
std::vector<GRow> g_table(long long lo, long long hi, const std::map<long long, long long>& m_bounds);

}  // namespace eqlines
