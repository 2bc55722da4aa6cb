#include "eqlines/gegenbauer.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace eqlines {

namespace {

void check_args(int n, int k) {
    if (n < 2) throw std::domain_error("gegenbauer: dimension n must be >= 2, got " + std::to_string(n));
    if (k < 0) throw std::domain_error("gegenbauer: degree k must be >= 0, got " + std::to_string(k));
}

// Coefficient vectors are built level by level; entries stay valid because
// std::map never relocates nodes.
class Cache {
public:
    const GegenbauerPoly& get(int n, int k) {
        {
            std::shared_lock lock(mu_);
            auto it = polys_.find({n, k});
            if (it != polys_.end()) return it->second;
        }
        std::unique_lock lock(mu_);
        auto it = polys_.find({n, k});
        if (it != polys_.end()) return it->second;
        auto c = gegenbauer_coefficients(n, k);
        GegenbauerPoly g{n, k, build(c), c};
        return polys_.emplace(std::pair{n, k}, std::move(g)).first->second;
    }

private:
    static Polynomial build(const std::vector<Rational>& c) {
        Polynomial::TermMap terms;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (!c[j].is_zero()) terms.emplace(Polynomial::Exponents{static_cast<unsigned>(j)}, c[j]);
        return Polynomial::from_terms({"u"}, terms).trimmed();
    }

    std::shared_mutex mu_;
    std::map<std::pair<int, int>, GegenbauerPoly> polys_;
};

Cache& cache() {
    static Cache c;
    return c;
}

}  // namespace

std::vector<Rational> gegenbauer_coefficients(int n, int k) {
    check_args(n, k);
    std::vector<Rational> prev{Rational(1)};
    if (k == 0) return prev;
    std::vector<Rational> cur{Rational(0), Rational(1)};
    for (int m = 2; m <= k; ++m) {
        // P_m = ((2m+n-4) u P_{m-1} - (m-1) P_{m-2}) / (m+n-3)
        Rational inv(1, m + n - 3);
        Rational lead(2 * m + n - 4);
        std::vector<Rational> next(static_cast<std::size_t>(m) + 1);
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += lead * cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= Rational(m - 1) * prev[j];
        for (auto& v : next) v *= inv;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

const GegenbauerPoly& gegenbauer(int n, int k) {
    check_args(n, k);
    return cache().get(n, k);
}

std::vector<Rational> gegenbauer_values(int n, int kmax, const Rational& u) {
    check_args(n, kmax);
    std::vector<Rational> p{Rational(1)};
    if (kmax >= 1) p.push_back(u);
    for (int m = 2; m <= kmax; ++m)
        p.push_back((Rational(2 * m + n - 4) * u * p[m - 1] - Rational(m - 1) * p[m - 2]) / Rational(m + n - 3));
    return p;
}

Rational gegenbauer_eval(int n, int k, const Rational& u) { return gegenbauer_values(n, k, u).back(); }

}  // namespace eqlines
