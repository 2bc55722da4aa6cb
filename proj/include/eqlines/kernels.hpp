#pragma once

// Batch drivers, each with a serial reference and an OpenMP variant that
// returns element-for-element the same results in the same order.

#include "eqlines/bounds.hpp"
#include "eqlines/sdp_solver.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eqlines {

struct CellSpec {
    int n = 0;
    Rational alpha;
};

struct TableSettings {
    int k3 = 20;
    int k4 = 10;
    int d = 5;
    SolverOptions solver;  // on_iteration is dropped in the threaded driver
};

struct CellResult {
    CellSpec cell;
    SdpSolution solution;
    double seconds = 0;  // assembly plus solve
    std::string error;   // set instead of `solution` when assembly or solve threw
};

CellResult solve_cell(const CellSpec& cell, const TableSettings& settings);
std::vector<CellResult> solve_cells_serial(std::span<const CellSpec> cells, const TableSettings& settings);
/// Dynamic schedule over cells; jobs <= 0 uses the OpenMP default.
std::vector<CellResult> solve_cells(std::span<const CellSpec> cells, const TableSettings& settings, int jobs);

/// Same problem as assemble(params), with the level blocks built concurrently.
SdpProblem assemble_parallel(const SdpParams& params, int jobs);

struct VerifyOutcome {
    long long m = 0;  // the chain is replayed at a = 1/m
    bool ok = false;
    std::string failed_step;
    std::string detail;
    std::optional<ProofChainCertificate> certificate;
};

/// Odd m in [lo, hi]; requires lo >= 3.
std::vector<VerifyOutcome> verify_odd_range_serial(long long lo, long long hi,
                                                   const Rational& t_perturbation = Rational(0));
std::vector<VerifyOutcome> verify_odd_range(long long lo, long long hi, int jobs,
                                            const Rational& t_perturbation = Rational(0));

}  // namespace eqlines
