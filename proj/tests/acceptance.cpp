// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Tolerances and time limits are fixed here, not taken from the command line.

#include "eqlines/analysis.hpp"
#include "eqlines/bounds.hpp"
#include "eqlines/gegenbauer.hpp"
#include "eqlines/reference.hpp"
#include "eqlines/sdp_problem.hpp"
#include "eqlines/sdp_solver.hpp"
#include "eqlines/threepoint.hpp"
#include "eqlines/twodist.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace eqlines;

namespace {

constexpr double kCriterion1Seconds = 0.010;
constexpr double kCriterion2Seconds = 1.0;
constexpr double kCriterion7Seconds = 1.0;
constexpr double kSolveSeconds = 60.0;
constexpr double kPointTol = 1e-12;
constexpr double kFlatRel = 0.01;
constexpr double kNonFlatRel = 0.05;
constexpr double kGuardRel = 1e-6;

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

void note(const std::string& line) { std::printf("    %s\n", line.c_str()); }

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void criterion1() {
    struct Row { long long a, value, lo, hi; };
    const Row want[] = {{3, 28, 7, 11},       {5, 276, 23, 59},     {7, 1128, 47, 131},
                        {9, 3160, 79, 227},   {11, 7140, 119, 347}, {13, 14028, 167, 491}};
    auto t0 = Clock::now();
    bool ok = true;
    for (const auto& w : want) {
        auto r = main_theorem_range(w.a);
        ok = ok && r.value == w.value && r.lo == w.lo && r.hi == w.hi;
        ok = ok && main_theorem_bound(w.a, w.lo) == w.value && main_theorem_bound(w.a, w.hi) == w.value;
        ok = ok && !main_theorem_bound(w.a, w.lo - 1) && !main_theorem_bound(w.a, w.hi + 1);
    }
    double s = since(t0);
    report(1, ok && s < kCriterion1Seconds, "six closed-form values and ranges, " + fmt(s * 1e3) + " ms");
}

void criterion2() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    Rational t5;
    int count = 0;
    for (long long m = 3; m <= 101; m += 2) {
        try {
            auto c = verify_proof_chain(Rational(1, m));
            if (m == 5) t5 = c.t;
            ++count;
        } catch (const CertificateError& e) {
            ok = false;
            detail += " m=" + std::to_string(m) + ":" + e.step();
        }
    }
    bool sym = verify_proof_chain_symbolic();
    double s = since(t0);
    bool anchor = t5 == Rational(1, 684);
    report(2, ok && sym && anchor && s < kCriterion2Seconds,
           std::to_string(count) + "/50 exact chains, symbolic " + (sym ? "ok" : "failed") + ", t(1/5) = " +
               t5.str() + ", " + fmt(s) + " s" + detail);
}

void criterion3() {
    const Rational alphas[] = {Rational(1, 3), Rational(1, 5), Rational(-1, 7), Rational(2, 5)};
    const S3Variant variants[] = {S3Variant::one_one_one, S3Variant::aa_one, S3Variant::aaa, S3Variant::aa_neg_a};
    int literal = 0, rescaled = 0, total = 0, grouping = 0, grouping_11 = 0, grouping_total = 0;
    std::string first_mismatch;
    for (int n = 5; n <= 16; ++n) {
        const Rational c = s3_closed_normalization(n);
        for (const auto& a : alphas) {
            for (auto v : variants) {
                auto tr = variant_triple(a, v);
                RationalMatrix s = s_matrix(n, 3, 3, tr[0], tr[1], tr[2]);
                Rational closed = s3_11_closed(n, a, v);
                ++total;
                if (closed == s(0, 0))
                    ++literal;
                else if (first_mismatch.empty())
                    first_mismatch = "n=" + std::to_string(n) + " alpha=" + a.str() + ": closed " + closed.str() +
                                     ", entry(0,0) " + s(0, 0).str();
                if (closed == c * s(1, 1)) ++rescaled;
            }
            RationalMatrix aaa = s_matrix(n, 3, 3, a, a, a), amm = s_matrix(n, 3, 3, a, -a, -a);
            RationalMatrix aam = s_matrix(n, 3, 3, a, a, -a), mmm = s_matrix(n, 3, 3, -a, -a, -a);
            grouping_total += 2;
            grouping += aaa(0, 0) == amm(0, 0);
            grouping += aam(0, 0) == mmm(0, 0);
            grouping_11 += aaa(1, 1) == amm(1, 1);
            grouping_11 += aam(1, 1) == mmm(1, 1);
        }
    }
    report(3, literal == total && grouping == grouping_total,
           "closed form == entry(0,0): " + std::to_string(literal) + "/" + std::to_string(total) +
               "; grouping identities on entry(0,0): " + std::to_string(grouping) + "/" + std::to_string(grouping_total));
    if (!first_mismatch.empty()) note("first mismatch " + first_mismatch);
    note("closed form == c(n) * entry(1,1): " + std::to_string(rescaled) + "/" + std::to_string(total) +
         ", c(n) = n^2(n+2)(n+4)/((n-1)(n+1)(n+3)); grouping identities on entry(1,1): " +
         std::to_string(grouping_11) + "/" + std::to_string(grouping_total));
}

void criterion4() {
    bool ok = true;
    for (int n = 3; n <= 20; ++n)
        for (int k = 0; k <= 10; ++k) {
            const auto& g = gegenbauer(n, k);
            ok = ok && gegenbauer_eval(n, k, Rational(1)) == 1 && g.poly.eval({{"u", Rational(1)}}) == 1;
            for (std::size_t j = 0; j < g.coeffs.size(); ++j)
                if ((static_cast<int>(j) - k) % 2 != 0) ok = ok && g.coeffs[j] == 0;
            for (const Rational& u : {Rational(1, 3), Rational(-2, 7)})
                ok = ok && gegenbauer_eval(n, k, -u) == (k % 2 ? -gegenbauer_eval(n, k, u) : gegenbauer_eval(n, k, u));
        }
    report(4, ok, "P(1) = 1 and parity for n = 3..20, k = 0..10");
}

void criterion5() {
    bool ok = relative_bound(23, Rational(1, 5)) == Rational(276) && relative_bound(7, Rational(1, 3)) == Rational(28);
    // n(1-a^2)/(1-na^2) is nonincreasing as a grows and nondecreasing in n, while defined.
    int checked = 0;
    for (int i = 1; i <= 50; ++i)
        for (int j = 1; j <= 50; ++j) {
            Rational a(i, 151), b(i + 1, 151);
            long long n = j + 1;
            auto ra = relative_bound(n, a), rb = relative_bound(n, b), rn = relative_bound(n + 1, a);
            if (ra && rb) { ok = ok && *rb >= *ra; ++checked; }
            if (ra && rn) { ok = ok && *rn >= *ra; ++checked; }
        }
    report(5, ok, "anchors exact; monotonicity on " + std::to_string(checked) + " grid comparisons");
}

void criterion6() {
    bool ok = true;
    double worst = 0;
    for (int n = 3; n <= 12; ++n) {
        auto s = simplex_pairs_construction(n);
        auto rep = check_points(s.points, {s.a.to_double(), s.b.to_double()}, 1e-9);
        ok = ok && s.points.size() == static_cast<std::size_t>(n * (n + 1) / 2) &&
             rep.distinct_products.size() == 2;
        ok = ok && rep.norm_error <= kPointTol && rep.product_error <= kPointTol;
        worst = std::max({worst, rep.norm_error, rep.product_error});
    }
    auto lp = lift_parameters(Rational(1, 5), Rational(-3, 5));
    ok = ok && lp.r2 == Rational(6, 5) && lp.cos_theta == Rational(1, 3);
    for (int n = 3; n <= 8; ++n) {
        auto s = simplex_pairs_construction(n);
        if ((s.a + s.b).sign() >= 0) continue;
        auto l = lift(s);
        double c = l.cos_theta.to_double();
        auto rep = check_points(l.lifted, {c, -c}, 1e-9);
        ok = ok && rep.norm_error <= kPointTol && rep.product_error <= kPointTol;
        worst = std::max({worst, rep.norm_error, rep.product_error});
    }
    report(6, ok, "sizes and two products for n = 3..12, lift (1/5,-3/5) -> 6/5, 1/3; worst error " + fmt(worst));
}

void criterion7() {
    auto t0 = Clock::now();
    auto m = m_bound_map(load_reference(default_data_dir() / "m_bounds.csv"));
    auto rows = g_table(7, 417, m);
    std::set<long long> exceptions;
    for (const auto& r : rows)
        if (!r.tight) exceptions.insert(r.n);
    double s = since(t0);
    const std::set<long long> want{22, 46, 78, 118, 166, 222, 286, 358};
    std::string got;
    for (long long n : exceptions) got += " " + std::to_string(n);
    report(7, exceptions == want && s < kCriterion7Seconds, "exceptions:" + got + ", " + fmt(s * 1e3) + " ms");
}

void criterion8() {
    auto c = crossover_k();
    auto b = case_bounds(9);
    bool ok = c.k == 9 && c.n == 438 && b.case_a == 64240 && b.case_b == 64620 && b.case_a < b.case_b;
    ok = ok && !(case_bounds(8).case_a < case_bounds(8).case_b);
    report(8, ok, "k = " + std::to_string(c.k) + ", n = " + std::to_string(c.n) + ", caseA = " + b.case_a.str() +
                      ", caseB = " + b.case_b.str());
}

// Solves at the default truncation; records everything criterion 10 needs.
struct Solved {
    SdpParams params;
    SdpSolution sol;
    double seconds = 0;
    bool feasible = false;  // the returned point passes the exact check
    Rational exact_objective;
};

Solved run(const SdpParams& p) {
    Solved s;
    s.params = p;
    auto t0 = Clock::now();
    s.sol = solve(assemble(p));
    s.seconds = since(t0);
    std::array<Rational, 6> x;
    for (std::size_t i = 0; i < 6; ++i) x[i] = rational_from_long_double(s.sol.x[i]);
    auto rep = check_feasible_exact(p, x);
    s.feasible = rep.feasible();
    s.exact_objective = rep.objective;
    return s;
}

std::vector<Solved> solved;

void criterion9() {
    bool ok = true;
    auto cell = [&](int n, long long inv) {
        solved.push_back(run({n, Rational(1, inv)}));
        const Solved& s = solved.back();
        ok = ok && s.seconds < kSolveSeconds;
        return s;
    };
    auto describe = [](const Solved& s, double ref) {
        double ub = static_cast<double>(s.sol.upper_bound);
        return "(" + std::to_string(s.params.n) + ", " + s.params.alpha.str() + ") upper " + fmt(ub) + " vs " +
               fmt(ref) + ", rel " + fmt((ub - ref) / ref) + ", " + to_string(s.sol.status) + ", " + fmt(s.seconds) +
               " s";
    };

    const Solved& base = cell(23, 5);
    double ub = static_cast<double>(base.sol.upper_bound);
    ok = ok && ub >= 275.7 && ub <= 278.8;
    note(describe(base, 276));

    struct Flat { long long inv; double ref; };
    for (auto f : {Flat{13, 14028}, Flat{15, 24976}, Flat{17, 41328}, Flat{19, 64620}}) {
        const Solved& s = cell(401, f.inv);
        double v = static_cast<double>(s.sol.upper_bound);
        ok = ok && std::abs(v - f.ref) <= kFlatRel * f.ref;
        note(describe(s, f.ref));
    }

    // Within 5%, or flagged with the residual and the solver state.
    struct NonFlat { int n; long long inv; double ref; };
    for (auto c : {NonFlat{401, 5, 17734}, NonFlat{419, 9, 88808}}) {
        const Solved& s = cell(c.n, c.inv);
        double v = static_cast<double>(s.sol.upper_bound);
        double rel = (v - c.ref) / c.ref;
        bool close = std::abs(rel) <= kNonFlatRel;
        note(describe(s, c.ref) + (close ? "" : "  [flagged residual]"));
        if (!close)
            note("      residual " + fmt(v - c.ref) + "; objective " + fmt(static_cast<double>(s.sol.objective)) +
                 ", gap bound " + fmt(static_cast<double>(s.sol.gap_bound)) + ", exact point feasible " +
                 (s.feasible ? "yes" : "no") + "; " + s.sol.message);
    }
    report(9, ok, "anchor, flat columns within 1%, non-flat cells within 5% or flagged");
}

void criterion10() {
    bool ok = true;
    int instances = 0;
    // Extra instances where Gerzon is informative.
    for (SdpParams p : {SdpParams{7, Rational(1, 3)}, SdpParams{60, Rational(1, 5)}, SdpParams{100, Rational(1, 9)}})
        solved.push_back(run(p));
    for (const Solved& s : solved) {
        if (!s.feasible) continue;
        ++instances;
        double g = static_cast<double>(gerzon_bound(s.params.n));
        double obj = s.exact_objective.to_double();
        if (obj > g * (1 + kGuardRel)) {
            ok = false;
            note("(" + std::to_string(s.params.n) + ", " + s.params.alpha.str() + ") exactly feasible objective " +
                 fmt(obj) + " exceeds Gerzon " + fmt(g));
        }
    }

    // Reducing K3/K4/d drops constraints, so the optimum can only grow.
    struct Mono { SdpParams full; SdpParams reduced; };
    const Mono mono[] = {
        {{7, Rational(1, 3)}, {7, Rational(1, 3), 10, 5, 3}},
        {{23, Rational(1, 5)}, {23, Rational(1, 5), 10, 5, 3}},
        {{60, Rational(1, 5)}, {60, Rational(1, 5), 5, 3, 2}},
        {{100, Rational(1, 9)}, {100, Rational(1, 9), 10, 5, 3}},
        {{401, Rational(1, 13)}, {401, Rational(1, 13), 10, 5, 3}},
    };
    int mono_ok = 0;
    for (const auto& m : mono) {
        SdpSolution full = solve(assemble(m.full));
        SdpSolution red = solve(assemble(m.reduced));
        bool good = red.upper_bound >= full.objective * (1 - kGuardRel);
        mono_ok += good;
        if (!good)
            note("(" + std::to_string(m.full.n) + ", " + m.full.alpha.str() + ") reduced " +
                 fmt(static_cast<double>(red.upper_bound)) + " < full " + fmt(static_cast<double>(full.objective)));
    }
    ok = ok && mono_ok == 5;
    report(10, ok, "Gerzon guard on " + std::to_string(instances) + " solved instances; monotone tightening " +
                       std::to_string(mono_ok) + "/5");
}

}  // namespace

int main() {
    using Fn = void (*)();
    const Fn all[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                      criterion6, criterion7, criterion8, criterion9, criterion10};
    for (int i = 0; i < 10; ++i) {
        try {
            all[i]();
        } catch (const std::exception& e) {
            report(i + 1, false, std::string("threw: ") + e.what());
        }
    }
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
