#include "eqlines/sdp_problem.hpp"

#include "eqlines/gegenbauer.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <span>

namespace eqlines {

namespace {

LMat to_numeric(const RationalMatrix& m) {
    LMat out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_long_double();
    return out;
}

MatrixBlock make_block(std::string name, RationalMatrix f0, std::array<RationalMatrix, 6> f) {
    std::vector<RationalMatrix> family;
    family.push_back(f0);
    for (auto& m : f) family.push_back(m);
    RangeReduction red = reduce_to_range(std::span<const RationalMatrix>(family));
    MatrixBlock b{std::move(name), std::move(f0), std::move(f), red.reduced[0], {}};
    for (std::size_t i = 0; i < 6; ++i) b.r[i] = red.reduced[i + 1];
    return b;
}

NumericBlock numeric(const RationalMatrix& f0, const std::array<RationalMatrix, 6>& f) {
    NumericBlock nb{to_numeric(f0), {}};
    for (std::size_t i = 0; i < 6; ++i) nb.f[i] = to_numeric(f[i]);
    return nb;
}

RationalMatrix eval_pencil(const RationalMatrix& f0, const std::array<RationalMatrix, 6>& f,
                           const std::array<Rational, 6>& x) {
    RationalMatrix m = f0;
    for (std::size_t i = 0; i < 6; ++i)
        if (!x[i].is_zero()) m += f[i] * x[i];
    return m;
}

}  // namespace

int SdpProblem::barrier_parameter() const {
    int nu = static_cast<int>(rows.size());
    for (const auto& b : num_blocks) nu += static_cast<int>(b.f0.rows());
    return nu;
}

namespace {

void validate(const SdpParams& params) {
    if (params.n < 3) throw std::domain_error("assemble: requires n >= 3");
    if (params.alpha.sign() <= 0 || params.alpha >= Rational(1))
        throw std::domain_error("assemble: cosine must lie in (0, 1)");
    if (params.k3 < 1 || params.k4 < 0 || params.d < 0)
        throw std::domain_error("assemble: requires k3 >= 1, k4 >= 0, d >= 0");
}

}  // namespace

MatrixBlock level_block(const SdpParams& params, int k) {
    AffineMatrix s = s_affine_stack(params.n, k, params.d, params.alpha, -params.alpha);
    return make_block("S_" + std::to_string(k), s.constant, s.coeff);
}

SdpProblem assemble_from_levels(const SdpParams& params, std::vector<MatrixBlock> levels) {
    validate(params);
    if (levels.size() != static_cast<std::size_t>(params.k4) + 1)
        throw std::invalid_argument("assemble_from_levels: expected k4 + 1 level blocks");
    SdpProblem p;
    p.params = params;
    const Rational& a = params.alpha;

    for (std::size_t i = 0; i < 6; ++i) {
        LinearRow r{"x" + std::to_string(i + 1) + ">=0", Rational(0), {}};
        r.c[i] = 1;
        p.rows.push_back(std::move(r));
    }
    auto pa = gegenbauer_values(params.n, params.k3, a);
    auto pm = gegenbauer_values(params.n, params.k3, -a);
    for (int k = 1; k <= params.k3; ++k) {
        LinearRow r{"gegenbauer_k" + std::to_string(k), Rational(3), {}};
        r.c[0] = pa[static_cast<std::size_t>(k)];
        r.c[1] = pm[static_cast<std::size_t>(k)];
        p.rows.push_back(std::move(r));
    }

    // W(x) = [[1,0],[0,0]] + [[0,1],[1,1]] (x1+x2)/3 + [[0,0],[0,1]] (x3+x4+x5+x6).
    {
        RationalMatrix w0(2, 2), wa(2, 2), wb(2, 2);
        w0(0, 0) = 1;
        wa(0, 1) = wa(1, 0) = wa(1, 1) = Rational(1, 3);
        wb(1, 1) = 1;
        p.blocks.push_back(make_block("W", w0, {wa, wa, wb, wb, wb, wb}));
    }
    for (auto& b : levels) p.blocks.push_back(std::move(b));

    for (const auto& r : p.rows) {
        NumericRow nr{r.c0.to_long_double(), {}};
        for (std::size_t i = 0; i < 6; ++i) nr.c[i] = r.c[i].to_long_double();
        p.num_rows.push_back(nr);
    }
    for (const auto& b : p.blocks) {
        p.num_blocks.push_back(numeric(b.r0, b.r));
        p.num_full_blocks.push_back(numeric(b.f0, b.f));
    }
    return p;
}

SdpProblem assemble(const SdpParams& params) {
    validate(params);
    std::vector<MatrixBlock> levels;
    for (int k = 0; k <= params.k4; ++k) levels.push_back(level_block(params, k));
    return assemble_from_levels(params, std::move(levels));
}

bool FeasibilityReport::feasible() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

FeasibilityReport check_feasible_exact(const SdpProblem& p, const std::array<Rational, 6>& x) {
    FeasibilityReport rep;
    rep.objective = Rational(1) + (x[0] + x[1]) / Rational(3);
    for (const auto& r : p.rows) {
        Rational v = r.c0;
        for (std::size_t i = 0; i < 6; ++i) v += r.c[i] * x[i];
        rep.checks.push_back({r.name, v.sign() >= 0, "value " + v.str()});
    }
    for (const auto& b : p.blocks) {
        RationalMatrix m = eval_pencil(b.f0, b.f, x);
        bool psd = is_psd_exact(m);
        auto minors = leading_principal_minors(m);
        bool minors_ok = true;
        for (const auto& v : minors) minors_ok = minors_ok && v.sign() >= 0;
        std::string detail = std::string("leading minors ") + (minors_ok ? "nonnegative" : "have a negative entry");
        if (psd != minors_ok) detail += " (semidefinite case: full elimination decides)";
        rep.checks.push_back({b.name + " psd", psd, detail});
    }
    return rep;
}

FeasibilityReport check_feasible_exact(const SdpParams& params, const std::array<Rational, 6>& x) {
    return check_feasible_exact(assemble(params), x);
}

Rational rational_from_long_double(long double v) {
    if (!std::isfinite(static_cast<double>(v))) throw std::domain_error("rational_from_long_double: non-finite");
    // Head and tail doubles cover the 64-bit mantissa exactly.
    double head = static_cast<double>(v);
    double tail = static_cast<double>(v - static_cast<long double>(head));
    return Rational::from_double(head) + Rational::from_double(tail);
}

long double normalized_min_eigenvalue(const LMat& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return 0;
    LVec dinv(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        long double d = m(i, i);
        if (d < 0) return d;
        dinv(i) = d > 0 ? 1 / std::sqrt(d) : 1;
    }
    LMat s = dinv.asDiagonal() * m * dinv.asDiagonal();
    Eigen::SelfAdjointEigenSolver<LMat> es(s, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

}  // namespace eqlines
