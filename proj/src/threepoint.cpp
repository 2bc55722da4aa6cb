#include "eqlines/threepoint.hpp"

#include "eqlines/gegenbauer.hpp"

#include <algorithm>
#include <string>

namespace eqlines {

namespace {

void check_dim(int n, int k) {
    if (n < 3) throw std::domain_error("three-point kernel: n must be >= 3, got " + std::to_string(n));
    if (k < 0) throw std::domain_error("three-point kernel: level k must be >= 0");
}

void check_unit_interval(const Rational& x, const char* name) {
    if (x < Rational(-1) || x > Rational(1))
        throw std::domain_error(std::string("s_matrix: argument ") + name + " = " + x.str() + " outside [-1, 1]");
}

}  // namespace

Polynomial q_poly(int n, int k) {
    check_dim(n, k);
    const auto& c = gegenbauer(n - 1, k).coeffs;
    Polynomial u = Polynomial::variable("u"), v = Polynomial::variable("v"), t = Polynomial::variable("t");
    Polynomial w = t - u * v;
    Polynomial r = (Polynomial(1) - u * u) * (Polynomial(1) - v * v);
    // Only j with k - j even carry a nonzero coefficient, so r's exponent is integral.
    Polynomial q;
    for (int j = k; j >= 0; j -= 2) {
        const Rational& cj = c[static_cast<std::size_t>(j)];
        if (cj.is_zero()) continue;
        q += w.pow(static_cast<unsigned>(j)) * r.pow(static_cast<unsigned>((k - j) / 2)) * cj;
    }
    return q;
}

ThreePointKernel three_point_kernel(int n, int k) { return {n, k, q_poly(n, k)}; }

Rational q_eval(int n, int k, const Rational& u, const Rational& v, const Rational& t) {
    check_dim(n, k);
    const auto& c = gegenbauer(n - 1, k).coeffs;
    Rational w = t - u * v;
    Rational r = (Rational(1) - u * u) * (Rational(1) - v * v);
    Rational sum;
    for (int j = k; j >= 0; j -= 2) {
        const Rational& cj = c[static_cast<std::size_t>(j)];
        if (!cj.is_zero()) sum += cj * w.pow(j) * r.pow((k - j) / 2);
    }
    return sum;
}

Rational h_coeff(int m, int i) {
    if (m < 2 || i < 0) throw std::domain_error("h_coeff: requires m >= 2 and i >= 0");
    return Rational(mpz_class(binomial(m + i - 1, m - 1) - binomial(m + i - 3, m - 1)));
}

RationalizedBlock rationalized_block(int n, int k, int d) {
    check_dim(n, k);
    if (d < 0) throw std::domain_error("rationalized_block: d must be >= 0");
    const int m = n + 2 * k;
    Polynomial q = q_poly(n, k) * Rational(m, n);
    Polynomial u = Polynomial::variable("u"), v = Polynomial::variable("v");
    std::vector<Polynomial> pu, pv;
    for (int i = 0; i <= d; ++i) {
        const Polynomial& p = gegenbauer(m, i).poly;
        pu.push_back(p);
        pv.push_back(p.substitute("u", v));
    }
    RationalizedBlock b{n, k, d, {}};
    b.entries.assign(static_cast<std::size_t>(d) + 1, std::vector<Polynomial>(static_cast<std::size_t>(d) + 1));
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) b.entries[i][j] = pu[i] * pv[j] * q;
    return b;
}

RationalMatrix rationalized_block_at(int n, int k, int d, const Rational& u, const Rational& v,
                                     const Rational& t) {
    check_dim(n, k);
    if (d < 0) throw std::domain_error("rationalized_block_at: d must be >= 0");
    const int m = n + 2 * k;
    Rational q = q_eval(n, k, u, v, t) * Rational(m, n);
    auto pu = gegenbauer_values(m, d, u);
    auto pv = gegenbauer_values(m, d, v);
    RationalMatrix out(static_cast<std::size_t>(d) + 1, static_cast<std::size_t>(d) + 1);
    if (q.is_zero()) return out;
    for (std::size_t i = 0; i < out.rows(); ++i) {
        Rational qi = q * pu[i];
        for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = qi * pv[j];
    }
    return out;
}

RationalMatrix s_matrix(int n, int k, int d, const Rational& u, const Rational& v, const Rational& t) {
    check_unit_interval(u, "u");
    check_unit_interval(v, "v");
    check_unit_interval(t, "t");
    std::array<const Rational*, 3> args{&u, &v, &t};
    std::array<int, 3> perm{0, 1, 2};
    RationalMatrix sum;
    bool first = true;
    do {
        RationalMatrix y = rationalized_block_at(n, k, d, *args[perm[0]], *args[perm[1]], *args[perm[2]]);
        if (first) {
            sum = std::move(y);
            first = false;
        } else {
            sum += y;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum * Rational(1, 6);
}

bool RelaxationVariables::nonnegative() const {
    return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.sign() >= 0; });
}

std::array<std::array<Rational, 3>, 7> affine_triples(const Rational& a, const Rational& b) {
    const Rational one(1);
    return {{{one, one, one}, {a, a, one}, {b, b, one}, {a, a, a}, {a, a, b}, {a, b, b}, {b, b, b}}};
}

RationalMatrix AffineMatrix::eval(const RelaxationVariables& x) const {
    RationalMatrix out = constant;
    for (std::size_t i = 0; i < 6; ++i)
        if (!x[i].is_zero()) out += coeff[i] * x[i];
    return out;
}

AffineMatrix s_affine_stack(int n, int k, int d, const Rational& alpha, const Rational& beta) {
    for (const Rational* p : {&alpha, &beta})
        if (*p < Rational(-1) || *p >= Rational(1))
            throw std::domain_error("s_affine: alpha and beta must lie in [-1, 1), got " + p->str());
    auto triples = affine_triples(alpha, beta);
    AffineMatrix out;
    out.constant = s_matrix(n, k, d, triples[0][0], triples[0][1], triples[0][2]);
    for (std::size_t i = 0; i < 6; ++i)
        out.coeff[i] = s_matrix(n, k, d, triples[i + 1][0], triples[i + 1][1], triples[i + 1][2]);
    return out;
}

RationalMatrix s_affine(int n, int k, int d, const RelaxationVariables& x, const Rational& alpha,
                        const Rational& beta) {
    return s_affine_stack(n, k, d, alpha, beta).eval(x);
}

RationalMatrix w_matrix(const RelaxationVariables& x) {
    Rational a = x.A();
    RationalMatrix w(2, 2);
    w(0, 0) = 1;
    w(0, 1) = a;
    w(1, 0) = a;
    w(1, 1) = a + x[2] + x[3] + x[4] + x[5];
    return w;
}

Rational w_det(const RelaxationVariables& x) {
    Rational a = x.A();
    return a + x[2] + x[3] + x[4] + x[5] - a * a;
}

Rational s3_11_closed(int n, const Rational& alpha, S3Variant variant) {
    if (n <= 3) throw std::domain_error("s3_11_closed: requires n >= 4, got " + std::to_string(n));
    return s3_11_closed(Rational(n), alpha, variant);
}

Rational s3_11_closed(const Rational& N, const Rational& alpha, S3Variant variant) {
    if (N <= Rational(3)) throw std::domain_error("s3_11_closed: requires n > 3, got " + N.str());
    if (alpha <= Rational(-1) || alpha >= Rational(1))
        throw std::domain_error("s3_11_closed: requires -1 < alpha < 1");
    const Rational& a = alpha;
    Rational top = N * (N + 2) * (N + 4) * (N + 6);
    Rational common = (N - 1) * (N + 1) * (N + 3);
    switch (variant) {
        case S3Variant::one_one_one:
            return 0;
        case S3Variant::aa_one:
            return top / (Rational(3) * common) * a.pow(2) * (Rational(1) - a * a).pow(3);
        case S3Variant::aaa:
            return -top / ((N - 2) * common) * (a - 1).pow(3) * a.pow(3) * ((N - 2) * a * a - 6 * a - 3);
        case S3Variant::aa_neg_a:
            return -top / ((N - 2) * common) * a.pow(3) * (a + 1).pow(3) * ((N - 2) * a * a + 6 * a - 3);
    }
    throw std::logic_error("s3_11_closed: unknown variant");
}

Rational s3_closed_normalization(int n) {
    const Rational N(n);
    return N * N * (N + 2) * (N + 4) / ((N - 1) * (N + 1) * (N + 3));
}

std::array<Rational, 3> variant_triple(const Rational& a, S3Variant variant) {
    switch (variant) {
        case S3Variant::one_one_one:
            return {Rational(1), Rational(1), Rational(1)};
        case S3Variant::aa_one:
            return {a, a, Rational(1)};
        case S3Variant::aaa:
            return {a, a, a};
        case S3Variant::aa_neg_a:
            return {a, a, -a};
    }
    throw std::logic_error("variant_triple: unknown variant");
}

}  // namespace eqlines
