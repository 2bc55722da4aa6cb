#include "eqlines/kernels.hpp"

#include <omp.h>

#include <chrono>
#include <stdexcept>

namespace eqlines {

namespace {

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

std::vector<long long> odd_values(long long lo, long long hi) {
    if (lo < 3) throw std::domain_error("verify range: requires m >= 3");
    std::vector<long long> ms;
    for (long long m = lo | 1; m <= hi; m += 2) ms.push_back(m);
    return ms;
}

VerifyOutcome verify_one(long long m, const Rational& perturbation) {
    VerifyOutcome out;
    out.m = m;
    try {
        out.certificate = verify_proof_chain(Rational(1, m), perturbation);
        out.ok = true;
    } catch (const CertificateError& e) {
        out.failed_step = e.step();
        out.detail = e.what();
    } catch (const std::exception& e) {
        out.failed_step = "exception";
        out.detail = e.what();
    }
    return out;
}

}  // namespace

CellResult solve_cell(const CellSpec& cell, const TableSettings& settings) {
    CellResult r;
    r.cell = cell;
    auto t0 = std::chrono::steady_clock::now();
    try {
        SdpProblem p = assemble({cell.n, cell.alpha, settings.k3, settings.k4, settings.d});
        r.solution = solve(p, settings.solver);
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CellResult> solve_cells_serial(std::span<const CellSpec> cells, const TableSettings& settings) {
    std::vector<CellResult> out;
    out.reserve(cells.size());
    for (const auto& c : cells) out.push_back(solve_cell(c, settings));
    return out;
}

std::vector<CellResult> solve_cells(std::span<const CellSpec> cells, const TableSettings& settings, int jobs) {
    TableSettings local = settings;
    local.solver.on_iteration = nullptr;  // callbacks are not assumed thread-safe
    std::vector<CellResult> out(cells.size());
    const long long count = static_cast<long long>(cells.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(jobs))
    for (long long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = solve_cell(cells[static_cast<std::size_t>(i)], local);
    return out;
}

SdpProblem assemble_parallel(const SdpParams& params, int jobs) {
    if (params.k4 < 0) throw std::domain_error("assemble: requires k4 >= 0");
    std::vector<MatrixBlock> levels(static_cast<std::size_t>(params.k4) + 1);
    std::vector<std::string> errors(levels.size());
    // Higher levels carry larger kernels; dynamic scheduling balances them.
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(jobs))
    for (int k = 0; k <= params.k4; ++k) {
        try {
            levels[static_cast<std::size_t>(k)] = level_block(params, k);
        } catch (const std::exception& e) {
            errors[static_cast<std::size_t>(k)] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw std::domain_error(e);
    return assemble_from_levels(params, std::move(levels));
}

std::vector<VerifyOutcome> verify_odd_range_serial(long long lo, long long hi, const Rational& t_perturbation) {
    std::vector<VerifyOutcome> out;
    for (long long m : odd_values(lo, hi)) out.push_back(verify_one(m, t_perturbation));
    return out;
}

std::vector<VerifyOutcome> verify_odd_range(long long lo, long long hi, int jobs, const Rational& t_perturbation) {
    auto ms = odd_values(lo, hi);
    std::vector<VerifyOutcome> out(ms.size());
    const long long count = static_cast<long long>(ms.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(jobs))
    for (long long i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = verify_one(ms[static_cast<std::size_t>(i)], t_perturbation);
    return out;
}

}  // namespace eqlines
