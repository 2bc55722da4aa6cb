#include "eqlines/bounds.hpp"

#include "eqlines/polynomial.hpp"
#include "eqlines/ratfun.hpp"
#include "eqlines/threepoint.hpp"

#include <array>
#include <cmath>

namespace eqlines {

std::string to_string(BoundMethod m) {
    switch (m) {
        case BoundMethod::gerzon: return "gerzon";
        case BoundMethod::neumann: return "neumann";
        case BoundMethod::relative: return "relative";
        case BoundMethod::main_theorem: return "main_theorem";
        case BoundMethod::relaxation_certificate: return "relaxation_certificate";
        case BoundMethod::sdp: return "sdp";
    }
    return "unknown";
}

long long gerzon_bound(long long n) {
    if (n < 2) throw std::domain_error("gerzon_bound: requires n >= 2");
    return n * (n + 1) / 2;
}

static void check_cosine(const Rational& alpha, const char* who) {
    if (alpha.sign() <= 0 || alpha >= Rational(1))
        throw std::domain_error(std::string(who) + ": cosine must lie in (0, 1), got " + alpha.str());
}

std::optional<long long> neumann_bound(long long n, const Rational& alpha) {
    check_cosine(alpha, "neumann_bound");
    Rational r = alpha.inverse();
    if (r.is_integer() && mpz_odd_p(r.num().get_mpz_t())) return std::nullopt;
    return 2 * n;
}

std::optional<Rational> relative_bound(long long n, const Rational& alpha) {
    check_cosine(alpha, "relative_bound");
    Rational a2 = alpha * alpha;
    Rational den = Rational(1) - Rational(n) * a2;
    if (den.sign() <= 0) return std::nullopt;
    return Rational(n) * (Rational(1) - a2) / den;
}

MainTheoremRange main_theorem_range(long long a) {
    if (a < 3) throw std::domain_error("main_theorem_bound: requires a >= 3, got " + std::to_string(a));
    if (a > 30000) throw std::domain_error("main_theorem_bound: a too large for 64-bit result");
    long long s = a * a;
    return {s - 2, 3 * s - 16, (s - 2) * (s - 1) / 2};
}

std::optional<long long> main_theorem_bound(long long a, long long n) {
    auto r = main_theorem_range(a);
    if (n < r.lo || n > r.hi) return std::nullopt;
    return r.value;
}

namespace {

void require(bool ok, const char* step, const std::string& detail, ProofChainCertificate& cert) {
    if (!ok) throw CertificateError(step, detail);
    cert.checked.emplace_back(step);
}

}  // namespace

RelaxationRow s3_row(const Rational& n, const Rational& a) {
    Rational f1 = s3_11_closed(n, a, S3Variant::aa_one);
    if (f1.is_zero()) throw std::domain_error("s3_row: degenerate row (A coefficient vanishes)");
    // x1 and x2 share f1, so the A = (x1+x2)/3 coefficient is 3 f1.
    return {s3_11_closed(n, a, S3Variant::aaa) / (Rational(3) * f1),
            s3_11_closed(n, a, S3Variant::aa_neg_a) / (Rational(3) * f1)};
}

RelaxationRow s1_row(int n, const Rational& a) {
    AffineMatrix s = s_affine_stack(n, 1, 1, a, -a);
    auto e = [&](std::size_t i) -> const Rational& { return s.coeff[i](1, 1); };
    if (!s.constant(1, 1).is_zero() || e(0) != e(1) || e(2) != e(4) || e(3) != e(5) || e(0).is_zero())
        throw std::logic_error("s1_row: k = 1 diagonal entry does not reduce to the A, B, C form");
    return {e(2) / (Rational(3) * e(0)), e(3) / (Rational(3) * e(0))};
}

ProofChainCertificate verify_proof_chain(const Rational& a, const Rational& t_perturbation) {
    if (a.sign() <= 0 || a > Rational(1, 3))
        throw std::domain_error("verify_proof_chain: requires 0 < a <= 1/3, got " + a.str());
    ProofChainCertificate cert;
    cert.a = a;
    const Rational a2 = a * a, a4 = a2 * a2, a6 = a4 * a2;
    const Rational s = Rational(6) * a2 - 1;
    const Rational D = s * (a - 1).pow(2) * (a + 1).pow(2);
    cert.n_sub = Rational(3) / a2 - 16;
    cert.t = -Rational(16) * a6 / D + t_perturbation;
    const Rational& t = cert.t;

    const Rational b1 = Rational(2) * a4 * (Rational(3) * a + 1) / (s * (a + 1).pow(3));
    const Rational c1 = Rational(2) * a4 * (Rational(3) * a - 1) / (s * (a - 1).pow(3));
    const Rational b2 = a / (a + 1), c2 = a / (a - 1);

    auto row = s3_row(cert.n_sub, a);
    require(row.b == b1 && row.c == c1, "s3_row_matches_closed_forms",
            "closed forms at n = 3/a^2 - 16 give " + row.b.str() + ", " + row.c.str(), cert);
    if (cert.n_sub.is_integer() && cert.n_sub >= Rational(3)) {
        auto r1 = s1_row(static_cast<int>(cert.n_sub.num().get_si()), a);
        require(r1.b == b2 && r1.c == c2, "s1_row_matches_kernel",
                "kernel gives " + r1.b.str() + ", " + r1.c.str(), cert);
    }

    require(t.sign() > 0, "multiplier_nonnegative", "t = " + t.str(), cert);
    cert.combined_coeff = -Rational(2) * a4 * (Rational(5) * a2 - 1) / D;
    require(t * b2 + b1 == cert.combined_coeff, "identity_B", "t*a/(1+a) + b1 = " + (t * b2 + b1).str(), cert);
    require(t * c2 + c1 == cert.combined_coeff, "identity_C", "t*a/(a-1) + c1 = " + (t * c2 + c1).str(), cert);
    const Rational a_coeff = t + 1;
    require(a_coeff == -(Rational(10) * a6 + Rational(13) * a4 - Rational(8) * a2 + 1) / D, "A_coefficient",
            "t + 1 = " + a_coeff.str(), cert);
    require(cert.combined_coeff.sign() < 0, "combined_coefficient_negative",
            "combined = " + cert.combined_coeff.str(), cert);

    // (t+1) A + k (B+C) >= 0 with k < 0 and B + C >= A(A-1) gives A - 1 <= (t+1)/(-k).
    const Rational slack = a_coeff / (-cert.combined_coeff);
    require(slack == (Rational(1) - Rational(3) * a2 - Rational(2) * a4) / (Rational(2) * a4), "divide_out",
            "(t+1)/(-k) = " + slack.str(), cert);
    cert.bound_on_A = slack + 1;
    require(cert.bound_on_A == (Rational(1) - Rational(3) * a2) / (Rational(2) * a4), "bound_on_A",
            cert.bound_on_A.str(), cert);
    require(cert.bound_on_A.sign() > 0, "bound_on_A_positive", cert.bound_on_A.str(), cert);
    cert.final_bound = cert.bound_on_A + 1;
    require(cert.final_bound == (Rational(1) - Rational(2) * a2) * (Rational(1) - a2) / (Rational(2) * a4),
            "final_factored", cert.final_bound.str(), cert);
    const Rational inv2 = a2.inverse();
    require(cert.final_bound == (inv2 - 2) * (inv2 - 1) / Rational(2), "final_in_reciprocal",
            cert.final_bound.str(), cert);
    return cert;
}

bool verify_proof_chain_symbolic(const Rational& t_perturbation) {
    using RF = RationalFunction;
    const RF a = RF::a(), one(1);
    const RF a2 = a * a, a4 = a2 * a2, a6 = a4 * a2;
    const RF s = RF(6) * a2 - one;
    const RF D = s * (a - one).pow(2) * (a + one).pow(2);
    const RF t = RF(-16) * a6 / D + RF(t_perturbation);
    const RF b1 = RF(2) * a4 * (RF(3) * a + one) / (s * (a + one).pow(3));
    const RF c1 = RF(2) * a4 * (RF(3) * a - one) / (s * (a - one).pow(3));
    const RF b2 = a / (a + one), c2 = a / (a - one);
    const RF combined = RF(-2) * a4 * (RF(5) * a2 - one) / D;

    // Closed-form k = 3 row at n = 3/a^2 - 16, as functions of a.
    const RF N = RF(3) / a2 - RF(16);
    const RF top = N * (N + RF(2)) * (N + RF(4)) * (N + RF(6));
    const RF common = (N - one) * (N + one) * (N + RF(3));
    const RF f1 = top / (RF(3) * common) * a2 * (one - a2).pow(3);
    const RF f3 = -top / ((N - RF(2)) * common) * (a - one).pow(3) * a.pow(3) *
                  ((N - RF(2)) * a2 - RF(6) * a - RF(3));
    const RF f4 = -top / ((N - RF(2)) * common) * a.pow(3) * (a + one).pow(3) *
                  ((N - RF(2)) * a2 + RF(6) * a - RF(3));

    bool ok = ratfun_equal(f3 / (RF(3) * f1), b1) && ratfun_equal(f4 / (RF(3) * f1), c1);
    ok = ok && ratfun_equal(t * b2 + b1, combined) && ratfun_equal(t * c2 + c1, combined);
    ok = ok && ratfun_equal(t + one, -(RF(10) * a6 + RF(13) * a4 - RF(8) * a2 + one) / D);
    const RF bound_on_A = (t + one) / (-combined) + one;
    ok = ok && ratfun_equal(bound_on_A, (one - RF(3) * a2) / (RF(2) * a4));
    ok = ok && ratfun_equal((one - RF(3) * a2 + RF(2) * a4) / (RF(2) * a4),
                            (one - RF(2) * a2) * (one - a2) / (RF(2) * a4));
    ok = ok && ratfun_equal(bound_on_A + one, (one - RF(2) * a2) * (one - a2) / (RF(2) * a4));
    return ok && verify_det_w_identity();
}

bool verify_det_w_identity() {
    std::array<Polynomial, 6> x;
    for (int i = 0; i < 6; ++i) x[static_cast<std::size_t>(i)] = Polynomial::variable("x" + std::to_string(i + 1));
    Polynomial A = (x[0] + x[1]) * Rational(1, 3);
    Polynomial B = x[2] + x[4], C = x[3] + x[5];
    // W = [[1, A], [A, A + x3 + x4 + x5 + x6]]
    Polynomial w00(1), w01 = A, w11 = A + x[2] + x[3] + x[4] + x[5];
    Polynomial det = w00 * w11 - w01 * w01;
    return det == B + C - A * (A - Polynomial(1));
}

std::optional<Rational> relaxation_bound(int n, const Rational& alpha) {
    check_cosine(alpha, "relaxation_bound");
    if (n < 4) throw std::domain_error("relaxation_bound: requires n >= 4");
    std::array<RelaxationRow, 2> rows{s3_row(Rational(n), alpha), s1_row(n, alpha)};
    // With B = l s, C = (1-l) s, s = B + C >= 0: each row reads A >= s g_i(l),
    // g_i(l) = -(b_i l + c_i (1-l)). The optimum is 1 + A = 2 + 1/min_l max_i g_i.
    auto g = [&](std::size_t i, const Rational& l) { return -(rows[i].b * l + rows[i].c * (Rational(1) - l)); };
    auto h = [&](const Rational& l) { return std::max(g(0, l), g(1, l)); };
    Rational best = std::min(h(Rational(0)), h(Rational(1)));
    // Intersection of the two lines, if it lies inside [0, 1].
    Rational slope0 = rows[0].c - rows[0].b, slope1 = rows[1].c - rows[1].b;  // g_i(l) = -c_i + l (c_i - b_i)
    if (slope0 != slope1) {
        Rational l = (rows[0].c - rows[1].c) / (slope0 - slope1);
        if (l.sign() >= 0 && l <= Rational(1)) best = std::min(best, h(l));
    }
    if (best.sign() <= 0) return std::nullopt;
    return Rational(2) + best.inverse();
}

BoundResult best_bound(long long n, const Rational& alpha, std::optional<long double> sdp_upper) {
    check_cosine(alpha, "best_bound");
    std::vector<BoundResult> cands;
    // Insertion order is the tie-break priority.
    Rational recip = alpha.inverse();
    if (recip.is_integer() && recip >= Rational(3) && recip <= Rational(30000)) {
        if (auto v = main_theorem_bound(recip.num().get_si(), n)) {
            BoundResult r{Rational(*v), BoundMethod::main_theorem, std::nullopt};
            if (alpha <= Rational(1, 3)) r.certificate = verify_proof_chain(alpha);
            cands.push_back(std::move(r));
        }
    }
    if (auto v = relative_bound(n, alpha)) cands.push_back({*v, BoundMethod::relative, std::nullopt});
    if (auto v = neumann_bound(n, alpha)) cands.push_back({Rational(*v), BoundMethod::neumann, std::nullopt});
    if (n >= 4 && n <= 100000)
        if (auto v = relaxation_bound(static_cast<int>(n), alpha))
            cands.push_back({*v, BoundMethod::relaxation_certificate, std::nullopt});
    if (sdp_upper && std::isfinite(static_cast<double>(*sdp_upper)))
        cands.push_back({Rational(mpz_class(std::ceil(static_cast<double>(*sdp_upper)))), BoundMethod::sdp,
                         std::nullopt});
    cands.push_back({Rational(gerzon_bound(n)), BoundMethod::gerzon, std::nullopt});
    std::size_t best = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
        if (cands[i].value < cands[best].value) best = i;
    return cands[best];
}

}  // namespace eqlines
