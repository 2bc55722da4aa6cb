#pragma once

#include "eqlines/sdp_problem.hpp"

#include <functional>
#include <optional>

namespace eqlines {

enum class SolveStatus { optimal, max_iterations, infeasible_numerics };
std::string to_string(SolveStatus s);

struct SolverDiagnostics {
    int phase = 0;  // 1 = finding an interior point, 2 = optimizing
    int outer = 0;
    int newton_steps = 0;
    long double tau = 0;
    long double objective = 0;
    long double gap_bound = 0;
    long double decrement = 0;
};

struct SolverOptions {
    long double gap_rel = 1e-7L;  // stop when gap bound <= gap_rel * max(1, |objective|)
    /// Still reported optimal when long double precision stops the path
    /// earlier, as long as the certified gap is within this relative bound.
    long double gap_rel_accept = 1e-6L;
    long double mu = 10;         // barrier weight growth per outer step
    int max_newton = 3000;
    /// Bound on the scaled variables; keeps the central path well defined.
    /// Scaled variables are x1/(3G), x2/(3G), x3/G^2, ... with G = n(n+1)/2.
    long double box = 100;
    int box_retries = 3;  // each retry enlarges the box 100-fold
    std::function<void(const SolverDiagnostics&)> on_iteration;
};

struct SdpSolution {
    std::array<long double, 6> x{};
    long double objective = 0;    // 1 + (x1 + x2)/3 at x
    long double gap_bound = 0;    // certified distance to the optimum of the boxed problem
    long double upper_bound = 0;  // objective + gap_bound
    long double max_violation = 0;
    SolveStatus status = SolveStatus::infeasible_numerics;
    int outer_iterations = 0;
    int newton_steps = 0;
    bool box_active = false;  // still binding after all retries: bound is not certified
    std::string message;
};

/// Log-barrier path following on the range-reduced problem, in long double.
/// Finds a strictly feasible start by an auxiliary phase.
SdpSolution solve(const SdpProblem& p, const SolverOptions& opts = {});

/// Largest violation of the constraints at x: negative linear slack
/// (relative to the row scale) or negative normalized eigenvalue of an
/// unreduced block.
long double max_violation(const SdpProblem& p, const std::array<long double, 6>& x);

/// ceil(upper_bound) as a line-count bound, when the solve produced one.
std::optional<long long> integer_bound(const SdpSolution& s);

}  // namespace eqlines
