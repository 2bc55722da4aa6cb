#include "eqlines/sdp_solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace eqlines {

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::max_iterations: return "max-iterations";
        case SolveStatus::infeasible_numerics: return "infeasible-numerics";
    }
    return "unknown";
}

namespace {

using Index = Eigen::Index;
constexpr long double kInf = std::numeric_limits<long double>::infinity();

struct Row {
    long double a0;
    LVec a;
};

struct Pencil {
    LMat f0;
    std::vector<LMat> f;  // one per variable
};

/// maximize c^T z subject to rows > 0 and pencils > 0.
struct Barrier {
    LVec c;
    std::vector<Row> rows;
    std::vector<Pencil> pencils;

    Index dim() const { return c.size(); }
    long double nu() const {
        long double v = static_cast<long double>(rows.size());
        for (const auto& p : pencils) v += static_cast<long double>(p.f0.rows());
        return v;
    }

    LMat pencil_at(const Pencil& p, const LVec& z) const {
        LMat s = p.f0;
        for (Index i = 0; i < dim(); ++i)
            if (z(i) != 0) s += z(i) * p.f[static_cast<std::size_t>(i)];
        return s;
    }

    /// Strict feasibility: positive rows, pencils pass a Cholesky test.
    bool interior(const LVec& z) const {
        for (const auto& r : rows)
            if (!(r.a0 + r.a.dot(z) > 0)) return false;
        for (const auto& p : pencils) {
            LMat s = pencil_at(p, z);
            LVec d(s.rows());
            for (Index i = 0; i < s.rows(); ++i) {
                if (!(s(i, i) > 0)) return false;
                d(i) = 1 / std::sqrt(s(i, i));
            }
            Eigen::LLT<LMat> llt(d.asDiagonal() * s * d.asDiagonal());
            if (llt.info() != Eigen::Success) return false;
            if (!(llt.matrixLLT().diagonal().minCoeff() > 0)) return false;
        }
        return true;
    }

    /// Gradient of f = tau c^T z + sum log g + sum log det, and the
    /// (positive definite) negated Hessian.
    void derivatives(const LVec& z, long double tau, LVec& grad, LMat& hess) const {
        const Index m = dim();
        grad = tau * c;
        hess = LMat::Zero(m, m);
        for (const auto& r : rows) {
            long double g = r.a0 + r.a.dot(z);
            grad += r.a / g;
            hess += (r.a / g) * (r.a / g).transpose();
        }
        for (const auto& p : pencils) {
            LMat s = pencil_at(p, z);
            LVec d(s.rows());
            for (Index i = 0; i < s.rows(); ++i) d(i) = 1 / std::sqrt(s(i, i));
            Eigen::LLT<LMat> llt(d.asDiagonal() * s * d.asDiagonal());
            std::vector<LMat> g(static_cast<std::size_t>(m));
            for (Index i = 0; i < m; ++i) {
                // G_i = L^{-1} (D F_i D) L^{-T}
                LMat t = d.asDiagonal() * p.f[static_cast<std::size_t>(i)] * d.asDiagonal();
                LMat u = llt.matrixL().solve(t);
                g[static_cast<std::size_t>(i)] = llt.matrixL().solve(u.transpose()).transpose();
                grad(i) += g[static_cast<std::size_t>(i)].trace();
            }
            for (Index i = 0; i < m; ++i)
                for (Index k = i; k < m; ++k) {
                    long double v = g[static_cast<std::size_t>(i)].cwiseProduct(g[static_cast<std::size_t>(k)].transpose()).sum();
                    hess(i, k) += v;
                    if (k != i) hess(k, i) += v;
                }
        }
    }
};

/// Jacobi-equilibrated LDLT solve.
LVec newton_direction(const LMat& h, const LVec& g) {
    LVec s(h.rows());
    for (Index i = 0; i < h.rows(); ++i) s(i) = h(i, i) > 0 ? 1 / std::sqrt(h(i, i)) : 1;
    LMat hs = s.asDiagonal() * h * s.asDiagonal();
    Eigen::LDLT<LMat> ldlt(hs);
    LVec y = ldlt.solve(s.asDiagonal() * g);
    return s.asDiagonal() * y;
}

struct PathResult {
    LVec z;
    LVec centered_z;  // last iterate that passed the centering test
    long double centered_tau = 0;
    long double centered_decrement = 0;
    bool has_centered = false;
    long double tau = 0;
    long double decrement = 0;
    int outer = 0;
    int newton = 0;
    bool converged = false;
    bool stalled = false;
};

/// Path following from an interior z0. `stop` may end the run early after
/// any Newton step.
PathResult follow_path(const Barrier& b, LVec z0, long double tau0, const SolverOptions& opts, int phase,
                       const std::function<long double(const LVec&)>& objective,
                       const std::function<bool(const LVec&)>& stop) {
    PathResult res;
    res.z = std::move(z0);
    res.tau = tau0;
    const long double nu = b.nu();
    long double mu = opts.mu;
    if (!b.interior(res.z)) {
        res.stalled = true;
        return res;
    }
    while (true) {
        // Centering.
        bool centered = false;
        long double prev_lam2 = kInf;
        int flat = 0;
        for (int it = 0; it < 80 && res.newton < opts.max_newton; ++it) {
            LVec grad;
            LMat hess;
            b.derivatives(res.z, res.tau, grad, hess);
            LVec dz = newton_direction(hess, grad);
            long double lam2 = grad.dot(dz);
            if (!std::isfinite(static_cast<double>(lam2)) || lam2 < 0) {
                res.stalled = true;
                return res;
            }
            res.decrement = std::sqrt(lam2);
            // Below 1e-4 the decrement is near the precision floor of the
            // barrier derivatives; stop once it no longer shrinks.
            flat = (lam2 < 1e-4L && lam2 > 0.5L * prev_lam2) ? flat + 1 : 0;
            if (lam2 < 1e-12L || flat >= 3) {
                centered = true;
                break;
            }
            prev_lam2 = lam2;
            // Damped Newton: 1/(1+delta) stays interior and increases f for a
            // self-concordant barrier; full steps inside the quadratic region.
            long double step = res.decrement < 0.25L ? 1 : 1 / (1 + res.decrement);
            bool accepted = false;
            for (int ls = 0; ls < 60; ++ls) {
                LVec trial = res.z + step * dz;
                if (b.interior(trial)) {
                    res.z = std::move(trial);
                    accepted = true;
                    break;
                }
                step *= 0.5L;
            }
            ++res.newton;
            if (!accepted) {
                res.stalled = true;
                break;
            }
            if (stop && stop(res.z)) {
                res.converged = true;
                return res;
            }
        }
        if (centered) {
            res.centered_z = res.z;
            res.centered_tau = res.tau;
            res.centered_decrement = res.decrement;
            res.has_centered = true;
            res.stalled = false;
            long double obj = objective(res.z);
            long double gap = (nu + res.decrement * std::sqrt(nu)) / res.tau;
            if (opts.on_iteration)
                opts.on_iteration({phase, res.outer, res.newton, res.tau, obj, gap, res.decrement});
            if (gap <= opts.gap_rel * std::max<long double>(1, std::fabs(obj))) {
                res.converged = true;
                return res;
            }
            ++res.outer;
            res.tau *= mu;
            continue;
        }
        // Centering failed (precision floor or budget): retry from the last
        // centered point with a gentler increase of tau.
        if (!res.has_centered || res.newton >= opts.max_newton) return res;
        mu = std::sqrt(mu);
        if (mu < 1.2L) return res;
        res.z = res.centered_z;
        res.tau = res.centered_tau * mu;
        res.decrement = res.centered_decrement;
    }
}

std::string sci(long double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << static_cast<double>(v);
    return os.str();
}

long double row_scale(long double a0, const std::array<long double, 6>& a) {
    long double s = std::fabs(a0);
    for (long double v : a) s = std::max(s, std::fabs(v));
    return s > 0 ? s : 1;
}

}  // namespace

long double max_violation(const SdpProblem& p, const std::array<long double, 6>& x) {
    long double worst = 0;
    for (const auto& r : p.num_rows) {
        long double g = r.c0;
        for (std::size_t i = 0; i < 6; ++i) g += r.c[i] * x[i];
        std::array<long double, 6> scaled{};
        for (std::size_t i = 0; i < 6; ++i) scaled[i] = r.c[i] * std::max<long double>(1, std::fabs(x[i]));
        worst = std::max(worst, -g / row_scale(r.c0, scaled));
    }
    for (const auto& b : p.num_full_blocks) {
        LMat m = b.f0;
        for (std::size_t i = 0; i < 6; ++i) m += x[i] * b.f[i];
        worst = std::max(worst, -normalized_min_eigenvalue(m));
    }
    return worst;
}

std::optional<long long> integer_bound(const SdpSolution& s) {
    if (s.status != SolveStatus::optimal || !std::isfinite(static_cast<double>(s.upper_bound))) return std::nullopt;
    return static_cast<long long>(std::ceil(static_cast<double>(s.upper_bound)));
}

namespace {

SdpSolution solve_boxed(const SdpProblem& p, const SolverOptions& opts) {
    const long double n = p.params.n;
    const long double G = n * (n + 1) / 2;
    const std::array<long double, 6> scale{3 * G, 3 * G, G * G, G * G, G * G, G * G};

    // Phase 2 data in scaled variables y, x_i = scale_i y_i.
    Barrier base;
    base.c = LVec::Zero(6);
    base.c(0) = base.c(1) = G;  // objective is 1 + G (y1 + y2)
    for (const auto& r : p.num_rows) {
        std::array<long double, 6> a{};
        for (std::size_t i = 0; i < 6; ++i) a[i] = r.c[i] * scale[i];
        long double s = row_scale(r.c0, a);
        Row row{r.c0 / s, LVec(6)};
        for (Index i = 0; i < 6; ++i) row.a(i) = a[static_cast<std::size_t>(i)] / s;
        base.rows.push_back(std::move(row));
    }
    for (Index i = 0; i < 6; ++i) {
        Row box{opts.box, LVec::Zero(6)};
        box.a(i) = -1;
        base.rows.push_back(std::move(box));
    }
    for (const auto& nb : p.num_blocks) {
        const Index k = nb.f0.rows();
        if (k == 0) continue;
        std::vector<LMat> f(6);
        for (std::size_t i = 0; i < 6; ++i) f[i] = nb.f[i] * scale[i];
        // Fixed congruence so every diagonal has magnitude at most one.
        LVec d(k);
        for (Index j = 0; j < k; ++j) {
            long double m = std::fabs(nb.f0(j, j));
            for (const auto& fi : f) m = std::max(m, std::fabs(fi(j, j)));
            d(j) = m > 0 ? 1 / std::sqrt(m) : 1;
        }
        Pencil pc{d.asDiagonal() * nb.f0 * d.asDiagonal(), {}};
        for (auto& fi : f) pc.f.push_back(d.asDiagonal() * fi * d.asDiagonal());
        base.pencils.push_back(std::move(pc));
    }

    SdpSolution sol;
    auto slacks_min = [&](const LVec& y) {
        long double lo = kInf;
        for (const auto& r : base.rows) lo = std::min(lo, r.a0 + r.a.dot(y));
        for (const auto& pc : base.pencils) {
            Eigen::SelfAdjointEigenSolver<LMat> es(base.pencil_at(pc, y), Eigen::EigenvaluesOnly);
            lo = std::min(lo, es.eigenvalues().minCoeff());
        }
        return lo;
    };

    LVec y0 = LVec::Constant(6, 1e-2L);
    long double start_min = slacks_min(y0);
    int total_newton = 0;
    if (!(start_min > 0)) {
        // Phase 1: maximize s with every slack >= s, over (y, s).
        Barrier aux;
        aux.c = LVec::Zero(7);
        aux.c(6) = 1;
        for (const auto& r : base.rows) {
            Row row{r.a0, LVec(7)};
            row.a.head(6) = r.a;
            row.a(6) = -1;
            aux.rows.push_back(std::move(row));
        }
        // Box rows (the last six) are not shifted by s.
        for (std::size_t i = base.rows.size() - 6; i < base.rows.size(); ++i) aux.rows[i].a(6) = 0;
        Row cap{1, LVec::Zero(7)};
        cap.a(6) = -1;
        aux.rows.push_back(std::move(cap));
        for (const auto& pc : base.pencils) {
            Pencil q{pc.f0, pc.f};
            q.f.push_back(-LMat::Identity(pc.f0.rows(), pc.f0.rows()));
            aux.pencils.push_back(std::move(q));
        }
        LVec z0(7);
        z0.head(6) = y0;
        z0(6) = std::min<long double>(start_min - 1, 0.5L);
        SolverOptions o1 = opts;
        o1.gap_rel = 1e-12L;
        auto res = follow_path(
            aux, z0, 1, o1, 1, [](const LVec& z) { return z(6); },
            [](const LVec& z) { return z(6) > 0; });
        total_newton += res.newton;
        if (!(res.z(6) > 0)) {
            sol.status = SolveStatus::infeasible_numerics;
            sol.newton_steps = total_newton;
            sol.message = res.stalled ? "phase 1 stalled before finding an interior point"
                                      : "no strictly feasible point found";
            return sol;
        }
        y0 = res.z.head(6);
    }

    auto objective = [&](const LVec& y) { return 1 + G * (y(0) + y(1)); };
    const long double tau0 = 1 / G;
    auto res = follow_path(base, y0, tau0, opts, 2, objective, nullptr);
    total_newton += res.newton;

    // A stalled run falls back to its last centered iterate, where the gap bound is valid.
    const bool use_centered = !res.converged && res.has_centered;
    const LVec& y = use_centered ? res.centered_z : res.z;
    const long double tau = use_centered ? res.centered_tau : res.tau;
    const long double dec = use_centered ? res.centered_decrement : res.decrement;
    for (std::size_t i = 0; i < 6; ++i) sol.x[i] = y(static_cast<Index>(i)) * scale[i];
    sol.objective = SdpProblem::objective(sol.x);
    const long double nu = base.nu();
    sol.gap_bound = (res.has_centered || res.converged) ? (nu + dec * std::sqrt(nu)) / tau : kInf;
    sol.upper_bound = sol.objective + sol.gap_bound;
    sol.max_violation = max_violation(p, sol.x);
    sol.outer_iterations = res.outer;
    sol.newton_steps = total_newton;
    for (Index i = 0; i < 6; ++i)
        if (opts.box - y(i) < 1e-3L * opts.box) sol.box_active = true;
    const long double rel_gap = sol.gap_bound / std::max<long double>(1, std::fabs(sol.objective));
    if (res.converged) {
        sol.status = SolveStatus::optimal;
    } else if (res.has_centered && rel_gap <= opts.gap_rel_accept) {
        sol.status = SolveStatus::optimal;
        sol.message = "precision floor reached at relative gap " + sci(rel_gap);
    } else if (res.stalled) {
        sol.status = SolveStatus::infeasible_numerics;
        sol.message = "line search stalled; gap bound refers to the last centered iterate";
    } else {
        sol.status = SolveStatus::max_iterations;
        sol.message = "path stopped before the gap tolerance, relative gap " + sci(rel_gap);
    }
    if (sol.box_active) sol.message += (sol.message.empty() ? "" : "; ") + std::string("variable box is active");
    return sol;
}

}  // namespace

SdpSolution solve(const SdpProblem& p, const SolverOptions& opts) {
    // The box only keeps the central path well defined; if it binds, the
    // boxed optimum could undercut the true one, so enlarge and re-solve.
    SolverOptions o = opts;
    SdpSolution sol = solve_boxed(p, o);
    for (int attempt = 0; attempt < opts.box_retries && sol.box_active; ++attempt) {
        o.box *= 100;
        int steps = sol.newton_steps;
        sol = solve_boxed(p, o);
        sol.newton_steps += steps;
    }
    if (sol.box_active && sol.status == SolveStatus::optimal) sol.status = SolveStatus::max_iterations;
    return sol;
}

}  // namespace eqlines
