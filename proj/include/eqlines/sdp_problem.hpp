#pragma once

#include "eqlines/matrix.hpp"
#include "eqlines/threepoint.hpp"

#include <Eigen/Dense>

#include <array>
#include <string>
#include <vector>

namespace eqlines {

using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using LVec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

struct SdpParams {
    int n = 0;
    Rational alpha;
    int k3 = 20;  // linear constraints for k = 1..k3
    int k4 = 10;  // matrix constraints for k = 0..k4
    int d = 5;    // matrix blocks are (d+1) x (d+1)
};

/// c0 + sum_i c[i] x_i >= 0.
struct LinearRow {
    std::string name;
    Rational c0;
    std::array<Rational, 6> c;
};

/// F0 + sum_i F[i] x_i must be PSD. `reduced` is the same pencil written on
/// its joint column space, so the two PSD conditions are equivalent.
struct MatrixBlock {
    std::string name;
    RationalMatrix f0;
    std::array<RationalMatrix, 6> f;
    RationalMatrix r0;
    std::array<RationalMatrix, 6> r;
};

/// Floating-point copy of the data, converted once from the exact values.
struct NumericRow {
    long double c0;
    std::array<long double, 6> c;
};
struct NumericBlock {
    LMat f0;
    std::array<LMat, 6> f;
};

struct SdpProblem {
    SdpParams params;
    std::vector<LinearRow> rows;  // nonnegativity, then the Gegenbauer rows
    std::vector<MatrixBlock> blocks;  // W, then S_0 .. S_k4
    std::vector<NumericRow> num_rows;
    std::vector<NumericBlock> num_blocks;  // reduced pencils
    std::vector<NumericBlock> num_full_blocks;  // unreduced, for violation reports

    /// 1 + (x1 + x2)/3.
    static long double objective(const std::array<long double, 6>& x) { return 1 + (x[0] + x[1]) / 3; }
    /// Barrier complexity: linear rows plus the reduced block sizes.
    int barrier_parameter() const;
};

/// Requires n >= 3, 0 < alpha < 1, k3 >= 1, k4 >= 0, d >= 0. Builds the
/// level blocks one after another; see kernels.hpp for the threaded variant.
SdpProblem assemble(const SdpParams& params);

/// The S_k block with its range reduction. Safe to call concurrently.
MatrixBlock level_block(const SdpParams& params, int k);
/// Rows, W and numeric copies around precomputed S_0 .. S_k4.
SdpProblem assemble_from_levels(const SdpParams& params, std::vector<MatrixBlock> levels);

struct ConstraintCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};
struct FeasibilityReport {
    std::vector<ConstraintCheck> checks;
    bool feasible() const;
    Rational objective;
};

/// Exact test of all constraints at x: signs for the linear rows, exact PSD
/// tests on the unreduced rationalized blocks.
FeasibilityReport check_feasible_exact(const SdpProblem& p, const std::array<Rational, 6>& x);
FeasibilityReport check_feasible_exact(const SdpParams& params, const std::array<Rational, 6>& x);

/// Exact value of a long double.
Rational rational_from_long_double(long double v);

/// Smallest eigenvalue of the diagonally normalized unreduced block at x
/// (congruence by diag(1/sqrt(M_ii))); used as the PSD violation measure.
long double normalized_min_eigenvalue(const LMat& m);

}  // namespace eqlines
