#include "eqlines/twodist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eqlines {

namespace {

double dot(const RealVector& x, const RealVector& y) {
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// Index pairs (i, j), i < j, in lexicographic order; shared by the float and exact paths.
std::vector<std::pair<int, int>> index_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
    return out;
}

void check_construction_dim(int n) {
    if (n < 3)
        throw std::domain_error("simplex_pairs_construction: n = " + std::to_string(n) +
                                " gives fewer than two distinct inner products; requires n >= 3");
}

}  // namespace

std::vector<std::vector<Rational>> simplex_pairs_gram(int n) {
    check_construction_dim(n);
    auto pairs = index_pairs(n);
    // <p - c, q - c> = <p, q> - 4/(n+1) and |p - c|^2 = 2(n-1)/(n+1).
    const Rational scale(n + 1, 2 * (n - 1));
    std::vector<std::vector<Rational>> g(pairs.size(), std::vector<Rational>(pairs.size()));
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            int shared = (pairs[i].first == pairs[j].first) + (pairs[i].first == pairs[j].second) +
                         (pairs[i].second == pairs[j].first) + (pairs[i].second == pairs[j].second);
            g[i][j] = (Rational(shared) - Rational(4, n + 1)) * scale;
        }
    return g;
}

TwoDistanceSet simplex_pairs_construction(int n) {
    check_construction_dim(n);
    const std::size_t big = static_cast<std::size_t>(n) + 1;

    // Gram-Schmidt on e_i - e_{i+1}, which span the hyperplane sum x = 0.
    std::vector<RealVector> frame;
    for (int i = 0; i < n; ++i) {
        RealVector v(big, 0.0);
        v[i] = 1;
        v[i + 1] = -1;
        for (int pass = 0; pass < 2; ++pass)  // second pass restores orthogonality lost to rounding
            for (const auto& f : frame) {
                double c = dot(v, f);
                for (std::size_t r = 0; r < big; ++r) v[r] -= c * f[r];
            }
        double len = std::sqrt(dot(v, v));
        for (double& x : v) x /= len;
        frame.push_back(std::move(v));
    }

    TwoDistanceSet s;
    s.dim = n;
    s.a = Rational(n - 3, 2 * (n - 1));
    s.b = Rational(-2, n - 1);
    const double centre = 2.0 / static_cast<double>(n + 1);
    const double len = std::sqrt(2.0 * (n - 1) / (n + 1));
    for (auto [i, j] : index_pairs(n)) {
        RealVector p(big, -centre);
        p[i] += 1;
        p[j] += 1;
        RealVector coords(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) coords[r] = dot(p, frame[r]) / len;
        s.points.push_back(std::move(coords));
    }
    s.gram = simplex_pairs_gram(n);
    return s;
}

LiftParameters lift_parameters(const Rational& a, const Rational& b) {
    const Rational one(1);
    if (a == b) throw std::domain_error("lift: the two inner products must differ");
    for (const Rational* p : {&a, &b})
        if (*p < -one || *p >= one) throw std::domain_error("lift: inner products must lie in [-1, 1), got " + p->str());
    if ((a + b).sign() >= 0)
        throw std::domain_error("lift: requires a + b < 0 (otherwise the scale R satisfies R <= 1), got a + b = " +
                                (a + b).str());
    Rational r2 = (Rational(2) - a - b) / Rational(2);
    // 1 - a = R^2 (1 - cos) and 1 - b = R^2 (1 + cos).
    return {r2, (a - b) / (Rational(2) - a - b)};
}

LiftResult lift(const TwoDistanceSet& s) {
    LiftParameters lp = lift_parameters(s.a, s.b);
    LiftResult out;
    out.r2 = lp.r2;
    out.cos_theta = lp.cos_theta;
    out.r = std::sqrt(lp.r2.to_double());
    out.dim = s.dim + 1;
    const double tail = std::sqrt((lp.r2 - Rational(1)).to_double()) / out.r;
    for (const auto& x : s.points) {
        RealVector y;
        y.reserve(x.size() + 1);
        for (double c : x) y.push_back(c / out.r);
        y.push_back(tail);
        out.lifted.push_back(std::move(y));
    }
    return out;
}

CheckReport check_points(const std::vector<RealVector>& pts, const std::vector<double>& admissible, double tol) {
    CheckReport rep;
    std::vector<double> prods;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        rep.norm_error = std::max(rep.norm_error, std::abs(std::sqrt(dot(pts[i], pts[i])) - 1.0));
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            double p = dot(pts[i], pts[j]);
            prods.push_back(p);
            double best = INFINITY;
            for (double v : admissible) best = std::min(best, std::abs(p - v));
            rep.product_error = std::max(rep.product_error, best);
        }
    }
    std::sort(prods.begin(), prods.end());
    for (double p : prods)
        if (rep.distinct_products.empty() || p - rep.distinct_products.back() > tol) rep.distinct_products.push_back(p);
    return rep;
}

std::array<Rational, 6> triple_distribution(const std::vector<std::vector<Rational>>& gram, const Rational& alpha) {
    const std::size_t n = gram.size();
    if (n == 0) throw std::domain_error("triple_distribution: empty set");
    const Rational neg = -alpha;
    // +1 for alpha, -1 for -alpha; anything else is not an equiangular configuration.
    std::vector<std::vector<int>> s(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (gram[i][j] == alpha)
                s[i][j] = 1;
            else if (gram[i][j] == neg)
                s[i][j] = -1;
            else
                throw std::domain_error("triple_distribution: product " + gram[i][j].str() + " is not +-" +
                                        alpha.str());
        }
    long long pairs_pos = 0, pairs_neg = 0;
    std::array<long long, 4> triples{};  // by number of negative products
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            (s[i][j] > 0 ? pairs_pos : pairs_neg) += 1;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                int negs = (s[i][j] < 0) + (s[i][k] < 0) + (s[j][k] < 0);
                triples[static_cast<std::size_t>(negs)] += 1;
            }
        }
    const Rational size(static_cast<long long>(n));
    return {Rational(3 * pairs_pos) / size, Rational(3 * pairs_neg) / size, Rational(triples[0]) / size,
            Rational(triples[1]) / size, Rational(triples[2]) / size, Rational(triples[3]) / size};
}

long long harmonic_bound(long long n) {
    if (n < 2) throw std::domain_error("harmonic_bound: requires n >= 2");
    return n * (n + 3) / 2;
}

long long g_upper(long long n, long long m_upper_n_plus_1) { return std::max(m_upper_n_plus_1, n * (n + 1) / 2); }

std::vector<GRow> g_table(long long lo, long long hi, const std::map<long long, long long>& m_bounds) {
    if (lo < 2 || hi < lo) throw std::domain_error("g_table: empty or invalid range");
    std::vector<GRow> rows;
    for (long long n = lo; n <= hi; ++n) {
        auto it = m_bounds.find(n + 1);
        if (it == m_bounds.end())
            throw std::out_of_range("g_table: no upper bound on M(" + std::to_string(n + 1) + ") for n = " +
                                    std::to_string(n));
        GRow r;
        r.n = n;
        r.lower = n * (n + 1) / 2;
        r.g_upper = g_upper(n, it->second);
        r.tight = r.g_upper == r.lower;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace eqlines
